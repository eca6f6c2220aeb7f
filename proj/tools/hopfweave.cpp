// hopfweave: command-line front end for plumbing presentations of open books.
//
// Every command prints JSON on stdout (or a plain table with --pretty) and
// diagnostics on stderr. Exit status: 0 success / equivalent / found,
// 1 not equivalent / exhausted / verification failed, 2 usage or input error.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hopfweave/hopfweave.hpp"

namespace {

using hopfweave::json_io::Json;
namespace hw = hopfweave;
namespace jio = hopfweave::json_io;

constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::size_t mu_cap_from_env() {
    const char* raw = std::getenv("HOPFWEAVE_MU_CAP");
    if (raw == nullptr || *raw == '\0') return hw::default_canonical_cap;
    try {
        std::size_t used = 0;
        const unsigned long value = std::stoul(raw, &used);
        if (used != std::string(raw).size() || value == 0) throw std::invalid_argument("bad value");
        return value;
    } catch (const std::exception&) {
        throw UsageError(std::string("HOPFWEAVE_MU_CAP must be a positive integer, got \"") + raw + "\"");
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw UsageError(path + ": " + e.what());
    }
}

hw::ManifoldModel load_manifold(const std::string& path) {
    if (path.empty()) return hw::ManifoldModel::sphere();
    return jio::manifold_from_json(read_json_file(path));
}

hw::PlaneFieldClass load_base(const std::string& path, const hw::ManifoldModel& m) {
    if (path.empty()) return hw::PlaneFieldClass::reference(m);
    return jio::field_class_from_json(read_json_file(path), m);
}

void emit(const Json& j, bool pretty_json) { std::cout << (pretty_json ? j.dump(2) : j.dump()) << '\n'; }

std::string join(const std::vector<hw::Integer>& v) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ']';
    return os.str();
}

void row(const std::string& key, const std::string& value) {
    std::cout << std::left << std::setw(20) << key << value << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hopfweave: invariants, stable equivalence and stabilization search for Hopf plumbings"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "print a human-readable table instead of JSON");

    std::string expr_a;
    std::string expr_b;
    std::string manifold_path;
    std::string base_a_path;
    std::string base_b_path;
    std::string cert_path;
    std::size_t depth = 1;
    long long coord_bound = 1;

    auto* cmd_tree = app.add_subcommand("tree", "canonical JSON of the presentation");
    cmd_tree->add_option("expr", expr_a, "plumbing expression")->required();
    bool canonical = false;
    cmd_tree->add_flag("--canonical", canonical, "print the canonical form instead");

    auto* cmd_inv = app.add_subcommand("invariants", "mu, lambda, Alexander polynomial, signature, fingerprint");
    cmd_inv->add_option("expr", expr_a, "plumbing expression")->required();

    auto* cmd_gk = app.add_subcommand("gk", "Grothendieck class and decompositions");
    cmd_gk->add_option("expr", expr_a, "plumbing expression")->required();

    auto* cmd_mono = app.add_subcommand("monodromy", "homological monodromy h = V^-1 V^T");
    cmd_mono->add_option("expr", expr_a, "plumbing expression")->required();

    auto* cmd_field = app.add_subcommand("field", "plane-field class of the open book");
    cmd_field->add_option("expr", expr_a, "plumbing expression")->required();
    cmd_field->add_option("--manifold", manifold_path, "ManifoldModel JSON file (default: S3)");
    cmd_field->add_option("--base", base_a_path, "PlaneFieldClass JSON of the base book (default: reference)");

    auto* cmd_equiv = app.add_subcommand("equiv", "stable equivalence verdict and H- budget");
    cmd_equiv->add_option("exprA", expr_a, "first expression")->required();
    cmd_equiv->add_option("exprB", expr_b, "second expression")->required();
    cmd_equiv->add_option("--manifold", manifold_path, "ManifoldModel JSON file (default: S3)");
    cmd_equiv->add_option("--base-a", base_a_path, "PlaneFieldClass JSON of the first base book");
    cmd_equiv->add_option("--base-b", base_b_path, "PlaneFieldClass JSON of the second base book");

    auto* cmd_search = app.add_subcommand("search", "search for a common stabilization");
    cmd_search->add_option("exprA", expr_a, "first expression")->required();
    cmd_search->add_option("exprB", expr_b, "second expression")->required();
    cmd_search->add_option("--depth", depth, "maximum moves per side")->required();
    cmd_search->add_option("--coord-bound", coord_bound, "gluing entries range over [-B, B]")
        ->check(CLI::NonNegativeNumber);

    auto* cmd_verify = app.add_subcommand("verify", "replay and check a certificate");
    cmd_verify->add_option("exprA", expr_a, "first expression")->required();
    cmd_verify->add_option("exprB", expr_b, "second expression")->required();
    cmd_verify->add_option("--cert", cert_path, "certificate JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        const std::size_t cap = mu_cap_from_env();
        const hw::PlumbingTree a = hw::elaborate(expr_a);

        if (*cmd_tree) {
            const hw::PlumbingTree t = canonical ? hw::canonical_form(a, cap) : a;
            if (pretty) {
                for (std::size_t k = 0; k < t.mu(); ++k)
                    row("band " + std::to_string(k + 1),
                        std::string(1, hw::sign_char(t.bands()[k].sign)) + " x=" + join(t.bands()[k].gluing));
            } else {
                std::cout << jio::tree_to_string(t) << '\n';
            }
            return exit_ok;
        }

        if (*cmd_inv) {
            const hw::InvariantReport r = hw::invariants(a);
            if (pretty) {
                row("mu", std::to_string(r.mu));
                row("lambda", std::to_string(r.lambda));
                row("alexander", r.alexander.to_string());
                row("sigma", std::to_string(r.sigma));
                row("det V", r.det_v.str());
                row("smith(V+V^T)", join(r.fingerprint.symmetrized_smith));
                row("smith(h-I)", join(r.fingerprint.monodromy_smith));
            } else {
                emit(jio::report_to_json(r), false);
            }
            return exit_ok;
        }

        if (*cmd_gk) {
            const hw::GkClass g = hw::gk_class(a);
            const hw::BasisCoefficients link = hw::decompose_link_class(g);
            std::optional<hw::BasisCoefficients> knot;
            try {
                knot = hw::decompose_knot_class(g);
            } catch (const hw::ParityObstruction&) {
            }
            if (pretty) {
                row("class (mu,lambda)", "(" + g.mu.str() + "," + g.lambda.str() + ")");
                row("links", link.first.str() + "[H+] + " + link.second.str() + "[H-]");
                row("knots", knot ? knot->first.str() + "[T+] + " + knot->second.str() + "[E]"
                                  : std::string("none (mu - 2 lambda odd)"));
            } else {
                Json j{{"class", jio::gk_to_json(g)},
                       {"link_basis", {{"H+", jio::integer_to_json(link.first)}, {"H-", jio::integer_to_json(link.second)}}},
                       {"knot_basis", nullptr}};
                if (knot)
                    j["knot_basis"] = {{"T+", jio::integer_to_json(knot->first)},
                                       {"E", jio::integer_to_json(knot->second)}};
                emit(j, false);
            }
            return exit_ok;
        }

        if (*cmd_mono) {
            const hw::IntMatrix v = hw::seifert_matrix(a);
            const hw::IntMatrix h = hw::homological_monodromy(v);
            const hw::LaurentPolynomial chi = hw::characteristic_polynomial(h);
            const unsigned order = hw::finite_order(h, 1000);
            if (pretty) {
                std::ostringstream m;
                m << h;
                row("h", m.str());
                row("charpoly", chi.to_string());
                row("order", order ? std::to_string(order) : std::string("infinite or > 1000"));
            } else {
                emit(Json{{"matrix", jio::matrix_to_json(h)},
                          {"seifert", jio::matrix_to_json(v)},
                          {"charpoly", jio::polynomial_to_json(chi)},
                          {"order", order ? Json(order) : Json(nullptr)}},
                     false);
            }
            return exit_ok;
        }

        if (*cmd_field) {
            const hw::ManifoldModel m = load_manifold(manifold_path);
            const hw::OpenBookClass book = hw::open_book(a, load_base(base_a_path, m));
            const hw::Integer div = hw::euler_divisibility(book.field);
            if (pretty) {
                row("manifold", m.name() + " H1=" + join(m.factors()));
                row("c", join(book.field.c().coefficients()));
                row("euler", join(book.field.euler().coefficients()));
                row("framing", book.field.framing().str());
                row("|xi|", div.str());
            } else {
                Json j = jio::field_class_to_json(book.field);
                emit(Json{{"manifold", jio::manifold_to_json(m)},
                          {"field", j},
                          {"euler_divisibility", jio::integer_to_json(div)}},
                     false);
            }
            return exit_ok;
        }

        const hw::PlumbingTree b = hw::elaborate(expr_b);

        if (*cmd_equiv) {
            const hw::ManifoldModel m = load_manifold(manifold_path);
            const hw::OpenBookClass book_a = hw::open_book(a, load_base(base_a_path, m));
            const hw::OpenBookClass book_b = hw::open_book(b, load_base(base_b_path, m));
            const hw::EquivalenceVerdict v = hw::stable_equivalence(book_a, book_b);
            const hw::H1Element c = hw::obstruction_class(book_a.field, book_b.field);
            if (pretty) {
                row("equivalent", v.equivalent ? "yes" : "no");
                row("obstruction", join(c.coefficients()));
                if (v.hminus_budget) row("H- budget", v.hminus_budget->str());
            } else {
                emit(Json{{"equivalent", v.equivalent},
                          {"obstruction", jio::vector_to_json(c.coefficients())},
                          {"hminus_budget", v.hminus_budget ? jio::integer_to_json(*v.hminus_budget) : Json(nullptr)}},
                     false);
            }
            return v.equivalent ? exit_ok : exit_negative;
        }

        if (*cmd_search) {
            hw::SearchConfig cfg;
            cfg.max_moves_per_side = depth;
            cfg.coord_bound = coord_bound;
            cfg.mu_cap = cap;
            const auto cert = hw::common_stabilization(a, b, cfg);
            if (pretty) {
                if (!cert) {
                    row("result", "exhausted");
                } else {
                    row("result", "found");
                    for (const auto& mv : cert->left)
                        row("left", std::string("H") + hw::sign_char(mv.sign) + " x=" + join(mv.gluing));
                    for (const auto& mv : cert->right)
                        row("right", std::string("H") + hw::sign_char(mv.sign) + " x=" + join(mv.gluing));
                    row("H- used", std::to_string(cert->budget_used));
                }
            } else if (cert) {
                emit(jio::certificate_to_json(*cert), false);
            } else {
                emit(Json{{"exhausted", true}, {"depth", depth}, {"coord_bound", coord_bound}}, false);
            }
            return cert ? exit_ok : exit_negative;
        }

        if (*cmd_verify) {
            const hw::StabilizationCertificate cert = jio::certificate_from_json(read_json_file(cert_path));
            const bool ok = hw::verify_certificate(a, b, cert, cap);
            if (pretty)
                row("valid", ok ? "yes" : "no");
            else
                emit(Json{{"valid", ok}}, false);
            return ok ? exit_ok : exit_negative;
        }
    } catch (const hw::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
