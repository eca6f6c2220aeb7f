#pragma once

// JSON forms of the library's data. Integers are written as JSON numbers when
// they fit in 64 bits and as decimal strings otherwise; both are accepted on
// input. Object keys are emitted in sorted order, so dump() output is
// canonical and round-trips byte for byte.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "grothendieck.hpp"
#include "integer.hpp"
#include "plane_fields.hpp"
#include "plumbing.hpp"
#include "search.hpp"

namespace hopfweave::json_io {

using Json = nlohmann::json;

class FormatError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline Json integer_to_json(const Integer& v) {
    if (fits_int64(v)) return Json(v.convert_to<std::int64_t>());
    return Json(v.str());
}

inline Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return Integer(j.get<std::string>());
        } catch (const std::exception&) {
            throw FormatError("not an integer: " + j.dump());
        }
    }
    throw FormatError("expected integer, got " + j.dump());
}

inline Json vector_to_json(const std::vector<Integer>& v) {
    Json out = Json::array();
    for (const Integer& x : v) out.push_back(integer_to_json(x));
    return out;
}

inline std::vector<Integer> vector_from_json(const Json& j) {
    if (!j.is_array()) throw FormatError("expected array, got " + j.dump());
    std::vector<Integer> out;
    for (const Json& x : j) out.push_back(integer_from_json(x));
    return out;
}

inline Json matrix_to_json(const IntMatrix& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.row(r)));
    return out;
}

inline const Json& field(const Json& obj, const char* key) {
    if (!obj.is_object()) throw FormatError("expected object, got " + obj.dump());
    auto it = obj.find(key);
    if (it == obj.end()) throw FormatError(std::string("missing key \"") + key + "\"");
    return *it;
}

// Bands and moves --------------------------------------------------------

inline Json move_to_json(BandSign sign, const GluingVector& x) {
    return Json{{"sign", std::string(1, sign_char(sign))}, {"x", vector_to_json(x)}};
}

inline BandSign sign_from_json(const Json& j) {
    if (!j.is_string()) throw FormatError("band sign must be a string");
    try {
        return parse_sign(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

inline Json tree_to_json(const PlumbingTree& t) {
    Json bands = Json::array();
    for (const Band& b : t.bands()) {
        Json j = move_to_json(b.sign, b.gluing);
        if (b.label) j["label"] = *b.label;
        bands.push_back(std::move(j));
    }
    return Json{{"bands", std::move(bands)}};
}

inline PlumbingTree tree_from_json(const Json& j) {
    const Json& bands = field(j, "bands");
    if (!bands.is_array()) throw FormatError("\"bands\" must be an array");
    std::vector<Band> out;
    for (const Json& b : bands) {
        Band band{sign_from_json(field(b, "sign")), vector_from_json(field(b, "x")), std::nullopt};
        if (auto it = b.find("label"); it != b.end()) {
            if (!it->is_string()) throw FormatError("band label must be a string");
            band.label = it->get<std::string>();
        }
        out.push_back(std::move(band));
    }
    try {
        return PlumbingTree(std::move(out));
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

inline std::string tree_to_string(const PlumbingTree& t) { return tree_to_json(t).dump(); }
inline PlumbingTree tree_from_string(const std::string& s) { return tree_from_json(Json::parse(s)); }

// Manifolds and plane fields ----------------------------------------------

inline Json manifold_to_json(const ManifoldModel& m) {
    return Json{{"h1", vector_to_json(m.factors())}, {"name", m.name()}};
}

inline ManifoldModel manifold_from_json(const Json& j) {
    const Json& name = field(j, "name");
    if (!name.is_string()) throw FormatError("manifold name must be a string");
    try {
        return ManifoldModel(name.get<std::string>(), vector_from_json(field(j, "h1")));
    } catch (const FormatError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

inline Json field_class_to_json(const PlaneFieldClass& xi) {
    return Json{{"c", vector_to_json(xi.c().coefficients())},
                {"euler", vector_to_json(xi.euler().coefficients())},
                {"framing", integer_to_json(xi.framing())}};
}

inline PlaneFieldClass field_class_from_json(const Json& j, const ManifoldModel& m) {
    try {
        return PlaneFieldClass(m, H1Element(m, vector_from_json(field(j, "c"))),
                               H1Element(m, vector_from_json(field(j, "euler"))),
                               integer_from_json(field(j, "framing")));
    } catch (const FormatError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

// Certificates --------------------------------------------------------------

inline Json moves_to_json(const MoveSequence& moves) {
    Json out = Json::array();
    for (const Move& m : moves) out.push_back(move_to_json(m.sign, m.gluing));
    return out;
}

inline MoveSequence moves_from_json(const Json& j) {
    if (!j.is_array()) throw FormatError("moves must be an array");
    MoveSequence out;
    for (const Json& m : j) out.push_back(Move{sign_from_json(field(m, "sign")), vector_from_json(field(m, "x"))});
    return out;
}

inline Json certificate_to_json(const StabilizationCertificate& c) {
    return Json{{"budget", c.budget_used},
                {"left", moves_to_json(c.left)},
                {"matched", tree_to_json(c.matched)},
                {"right", moves_to_json(c.right)}};
}

inline StabilizationCertificate certificate_from_json(const Json& j) {
    const Json& budget = field(j, "budget");
    if (!budget.is_number_unsigned()) throw FormatError("certificate budget must be a nonnegative integer");
    return {moves_from_json(field(j, "left")), moves_from_json(field(j, "right")), tree_from_json(field(j, "matched")),
            budget.get<std::size_t>()};
}

// Reports -------------------------------------------------------------------

inline Json polynomial_to_json(const LaurentPolynomial& p) {
    return Json{{"coefficients", vector_to_json(p.dense_coefficients())},
                {"lowest_exponent", p.lowest_exponent()},
                {"text", p.to_string()}};
}

inline Json report_to_json(const InvariantReport& r) {
    const Fingerprint& f = r.fingerprint;
    return Json{{"mu", r.mu},
                {"lambda", r.lambda},
                {"alexander", polynomial_to_json(r.alexander)},
                {"sigma", r.sigma},
                {"det_v", integer_to_json(r.det_v)},
                {"fingerprint",
                 {{"mu", f.mu},
                  {"lambda", f.lambda},
                  {"alexander", vector_to_json(f.alexander.dense_coefficients())},
                  {"sigma", f.sigma},
                  {"symmetrized_smith", vector_to_json(f.symmetrized_smith)},
                  {"monodromy_smith", vector_to_json(f.monodromy_smith)}}}};
}

inline Json gk_to_json(const GkClass& g) {
    return Json{{"mu", integer_to_json(g.mu)}, {"lambda", integer_to_json(g.lambda)}};
}

}  // namespace hopfweave::json_io
