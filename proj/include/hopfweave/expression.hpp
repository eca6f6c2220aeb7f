#pragma once

// A small expression language for plumbing presentations:
//
//   expr := atom
//         | "plumb(" expr "," expr [";" "X=" matrix] ")"
//         | "stab(" expr ";" sign ["," "x=" vector] ")"
//         | "knotplumb(" expr ";" kind ["," "x=" vector] ["," "c=" int] ")"
//   atom := "U" | "H+" | "H-" | "T+" | "E"
//   kind := "T+" | "E"
//
// Whitespace between tokens is ignored. Omitted X / x mean zero coupling and
// an omitted c means +1; whether an argument was written is kept in the tree
// so that printing reproduces the input structure.

#include <cctype>
#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "integer.hpp"
#include "plumbing.hpp"

namespace hopfweave {

enum class AtomKind { unknot, hopf_positive, hopf_negative, trefoil, figure_eight };

struct Expression;
using ExprRef = std::shared_ptr<const Expression>;
using IntVector = std::vector<Integer>;
using IntRows = std::vector<IntVector>;

struct AtomExpr {
    AtomKind kind;
    friend bool operator==(const AtomExpr&, const AtomExpr&) = default;
};

struct PlumbExpr {
    ExprRef lhs;
    ExprRef rhs;
    std::optional<IntRows> coupling;
};

struct StabExpr {
    ExprRef base;
    BandSign sign;
    std::optional<IntVector> gluing;
};

struct KnotPlumbExpr {
    ExprRef base;
    KnotKind kind;
    std::optional<IntVector> gluing;
    std::optional<Integer> crossing;
};

struct Expression {
    std::variant<AtomExpr, PlumbExpr, StabExpr, KnotPlumbExpr> node;
};

bool operator==(const Expression& a, const Expression& b);

inline bool operator==(const PlumbExpr& a, const PlumbExpr& b) {
    return *a.lhs == *b.lhs && *a.rhs == *b.rhs && a.coupling == b.coupling;
}
inline bool operator==(const StabExpr& a, const StabExpr& b) {
    return *a.base == *b.base && a.sign == b.sign && a.gluing == b.gluing;
}
inline bool operator==(const KnotPlumbExpr& a, const KnotPlumbExpr& b) {
    return *a.base == *b.base && a.kind == b.kind && a.gluing == b.gluing && a.crossing == b.crossing;
}
inline bool operator==(const Expression& a, const Expression& b) { return a.node == b.node; }

inline ExprRef make_atom(AtomKind k) { return std::make_shared<const Expression>(Expression{AtomExpr{k}}); }
inline ExprRef make_plumb(ExprRef lhs, ExprRef rhs, std::optional<IntRows> x = std::nullopt) {
    return std::make_shared<const Expression>(Expression{PlumbExpr{std::move(lhs), std::move(rhs), std::move(x)}});
}
inline ExprRef make_stab(ExprRef base, BandSign sign, std::optional<IntVector> x = std::nullopt) {
    return std::make_shared<const Expression>(Expression{StabExpr{std::move(base), sign, std::move(x)}});
}
inline ExprRef make_knot_plumb(ExprRef base, KnotKind kind, std::optional<IntVector> x = std::nullopt,
                               std::optional<Integer> c = std::nullopt) {
    return std::make_shared<const Expression>(
        Expression{KnotPlumbExpr{std::move(base), kind, std::move(x), std::move(c)}});
}

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t offset, std::size_t line, std::size_t column)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          offset_(offset),
          line_(line),
          column_(column) {}

    std::size_t offset() const noexcept { return offset_; }  // 0-based
    std::size_t line() const noexcept { return line_; }      // 1-based
    std::size_t column() const noexcept { return column_; }  // 1-based

private:
    std::size_t offset_;
    std::size_t line_;
    std::size_t column_;
};

namespace detail {

class ExpressionParser {
public:
    explicit ExpressionParser(std::string_view text) : text_(text) {}

    ExprRef parse() {
        ExprRef e = expression();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected " + describe_current() + " after expression");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& message) const {
        std::size_t line = 1;
        std::size_t column = 1;
        for (std::size_t i = 0; i < pos_; ++i) {
            if (text_[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError(message, pos_, line, column);
    }

    std::string describe_current() const {
        if (pos_ >= text_.size()) return "end of input";
        return std::string("'") + text_[pos_] + "'";
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            fail(std::string("expected '") + c + "', found " + describe_current());
        ++pos_;
    }

    std::string word() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    char sign_char() {
        skip_ws();
        if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) return text_[pos_++];
        fail("expected '+' or '-', found " + describe_current());
    }

    ExprRef expression() {
        skip_ws();
        const std::size_t start = pos_;
        const std::string w = word();
        if (w.empty()) fail("expected expression, found " + describe_current());
        if (w == "U") return make_atom(AtomKind::unknot);
        if (w == "H") return make_atom(sign_char() == '+' ? AtomKind::hopf_positive : AtomKind::hopf_negative);
        if (w == "T") {
            if (sign_char() != '+') {
                --pos_;
                fail("only the positive trefoil T+ is an atom");
            }
            return make_atom(AtomKind::trefoil);
        }
        if (w == "E") return make_atom(AtomKind::figure_eight);
        if (w == "plumb") return plumb_call();
        if (w == "stab") return stab_call();
        if (w == "knotplumb") return knot_plumb_call();
        pos_ = start;
        fail("unknown name '" + w + "'");
    }

    ExprRef plumb_call() {
        expect('(');
        ExprRef lhs = expression();
        expect(',');
        ExprRef rhs = expression();
        std::optional<IntRows> x;
        if (peek(';')) {
            ++pos_;
            keyword("X");
            expect('=');
            x = matrix();
        }
        expect(')');
        return make_plumb(std::move(lhs), std::move(rhs), std::move(x));
    }

    ExprRef stab_call() {
        expect('(');
        ExprRef base = expression();
        expect(';');
        const BandSign sign = sign_char() == '+' ? BandSign::positive : BandSign::negative;
        std::optional<IntVector> x;
        if (peek(',')) {
            ++pos_;
            keyword("x");
            expect('=');
            x = vector();
        }
        expect(')');
        return make_stab(std::move(base), sign, std::move(x));
    }

    ExprRef knot_plumb_call() {
        expect('(');
        ExprRef base = expression();
        expect(';');
        skip_ws();
        const std::size_t kind_pos = pos_;
        const std::string k = word();
        KnotKind kind;
        if (k == "T" && sign_char() == '+') {
            kind = KnotKind::trefoil;
        } else if (k == "E") {
            kind = KnotKind::figure_eight;
        } else {
            pos_ = kind_pos;
            fail("expected knot kind 'T+' or 'E'");
        }
        std::optional<IntVector> x;
        std::optional<Integer> c;
        while (peek(',')) {
            ++pos_;
            skip_ws();
            const std::size_t key_pos = pos_;
            const std::string key = word();
            if (key == "x" && !x && !c) {
                expect('=');
                x = vector();
            } else if (key == "c" && !c) {
                expect('=');
                c = integer();
            } else {
                pos_ = key_pos;
                fail("expected 'x=' or 'c=' argument");
            }
        }
        expect(')');
        return make_knot_plumb(std::move(base), kind, std::move(x), std::move(c));
    }

    void keyword(const char* name) {
        skip_ws();
        const std::size_t start = pos_;
        if (word() != name) {
            pos_ = start;
            fail(std::string("expected '") + name + "='");
        }
    }

    Integer integer() {
        skip_ws();
        const std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        const std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == digits) fail("expected integer, found " + describe_current());
        std::string literal(text_.substr(start, pos_ - start));
        if (literal.front() == '+') literal.erase(0, 1);
        return Integer(literal);
    }

    IntVector vector() {
        expect('[');
        IntVector out;
        if (peek(']')) {
            ++pos_;
            return out;
        }
        out.push_back(integer());
        while (peek(',')) {
            ++pos_;
            out.push_back(integer());
        }
        expect(']');
        return out;
    }

    IntRows matrix() {
        expect('[');
        IntRows out;
        if (peek(']')) {
            ++pos_;
            return out;
        }
        out.push_back(vector());
        while (peek(',')) {
            ++pos_;
            out.push_back(vector());
        }
        expect(']');
        return out;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

inline void render_vector(std::string& out, const IntVector& v) {
    out += '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += v[i].str();
    }
    out += ']';
}

inline void render_into(std::string& out, const Expression& e) {
    std::visit(
        [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, AtomExpr>) {
                switch (n.kind) {
                    case AtomKind::unknot: out += "U"; break;
                    case AtomKind::hopf_positive: out += "H+"; break;
                    case AtomKind::hopf_negative: out += "H-"; break;
                    case AtomKind::trefoil: out += "T+"; break;
                    case AtomKind::figure_eight: out += "E"; break;
                }
            } else if constexpr (std::is_same_v<T, PlumbExpr>) {
                out += "plumb(";
                render_into(out, *n.lhs);
                out += ',';
                render_into(out, *n.rhs);
                if (n.coupling) {
                    out += ";X=[";
                    for (std::size_t r = 0; r < n.coupling->size(); ++r) {
                        if (r) out += ',';
                        render_vector(out, (*n.coupling)[r]);
                    }
                    out += ']';
                }
                out += ')';
            } else if constexpr (std::is_same_v<T, StabExpr>) {
                out += "stab(";
                render_into(out, *n.base);
                out += ';';
                out += sign_char(n.sign);
                if (n.gluing) {
                    out += ",x=";
                    render_vector(out, *n.gluing);
                }
                out += ')';
            } else {
                out += "knotplumb(";
                render_into(out, *n.base);
                out += n.kind == KnotKind::trefoil ? ";T+" : ";E";
                if (n.gluing) {
                    out += ",x=";
                    render_vector(out, *n.gluing);
                }
                if (n.crossing) out += ",c=" + n.crossing->str();
                out += ')';
            }
        },
        e.node);
}

}  // namespace detail

inline ExprRef parse_expr(std::string_view text) { return detail::ExpressionParser(text).parse(); }

/// Canonical text; parse_expr(render_expr(e)) == e.
inline std::string render_expr(const Expression& e) {
    std::string out;
    detail::render_into(out, e);
    return out;
}

class ElaborationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Builds the plumbing tree an expression denotes.
inline PlumbingTree elaborate(const Expression& e) {
    return std::visit(
        [](const auto& n) -> PlumbingTree {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, AtomExpr>) {
                switch (n.kind) {
                    case AtomKind::unknot: return unknot();
                    case AtomKind::hopf_positive: return hopf_band(BandSign::positive);
                    case AtomKind::hopf_negative: return hopf_band(BandSign::negative);
                    case AtomKind::trefoil: return knot_plumb(unknot(), KnotKind::trefoil, {}, 1);
                    case AtomKind::figure_eight: return knot_plumb(unknot(), KnotKind::figure_eight, {}, 1);
                }
                throw std::logic_error("unhandled atom");
            } else if constexpr (std::is_same_v<T, PlumbExpr>) {
                const PlumbingTree lhs = elaborate(*n.lhs);
                const PlumbingTree rhs = elaborate(*n.rhs);
                if (!n.coupling) return plumb(lhs, rhs);
                const IntRows& rows = *n.coupling;
                if (rows.size() != lhs.mu())
                    throw ElaborationError("plumb: X has " + std::to_string(rows.size()) + " rows, left side has " +
                                           std::to_string(lhs.mu()) + " bands");
                for (const IntVector& r : rows)
                    if (r.size() != rhs.mu())
                        throw ElaborationError("plumb: X row has " + std::to_string(r.size()) +
                                               " entries, right side has " + std::to_string(rhs.mu()) + " bands");
                return plumb(lhs, rhs, IntMatrix::from_rows(rows, rhs.mu()));
            } else if constexpr (std::is_same_v<T, StabExpr>) {
                const PlumbingTree base = elaborate(*n.base);
                IntVector x = n.gluing ? *n.gluing : IntVector(base.mu());
                if (x.size() != base.mu())
                    throw ElaborationError("stab: x has " + std::to_string(x.size()) + " entries, expected " +
                                           std::to_string(base.mu()));
                return hopf_plumb(base, n.sign, std::move(x));
            } else {
                const PlumbingTree base = elaborate(*n.base);
                IntVector x = n.gluing ? *n.gluing : IntVector(base.mu());
                if (x.size() != base.mu())
                    throw ElaborationError("knotplumb: x has " + std::to_string(x.size()) + " entries, expected " +
                                           std::to_string(base.mu()));
                const Integer c = n.crossing.value_or(Integer(1));
                if (abs(c) != 1) throw ElaborationError("knotplumb: c must be +1 or -1");
                return knot_plumb(base, n.kind, std::move(x), c);
            }
        },
        e.node);
}

inline PlumbingTree elaborate(std::string_view text) { return elaborate(*parse_expr(text)); }

}  // namespace hopfweave
