#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "integer.hpp"

namespace hopfweave {

/// Integer Laurent polynomial in one variable t. Zero coefficients are never
/// stored, so the empty map is the zero polynomial.
class LaurentPolynomial {
public:
    using Exponent = std::int64_t;
    using Terms = std::map<Exponent, Integer>;

    LaurentPolynomial() = default;
    LaurentPolynomial(const Integer& constant) { add_term(0, constant); }  // NOLINT: implicit by intent
    LaurentPolynomial(long long constant) : LaurentPolynomial(Integer(constant)) {}  // NOLINT

    static LaurentPolynomial monomial(Exponent e, const Integer& coeff = 1) {
        LaurentPolynomial p;
        p.add_term(e, coeff);
        return p;
    }

    /// Polynomial c0 + c1 t + c2 t^2 + ...
    static LaurentPolynomial from_coefficients(const std::vector<Integer>& ascending, Exponent lowest = 0) {
        LaurentPolynomial p;
        for (std::size_t i = 0; i < ascending.size(); ++i)
            p.add_term(lowest + static_cast<Exponent>(i), ascending[i]);
        return p;
    }

    static LaurentPolynomial t() { return monomial(1); }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    Integer coefficient(Exponent e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    Exponent lowest_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
    Exponent highest_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
    Integer leading_coefficient() const { return terms_.empty() ? Integer(0) : terms_.rbegin()->second; }

    /// Dense coefficients from lowest to highest exponent.
    std::vector<Integer> dense_coefficients() const {
        std::vector<Integer> out;
        if (terms_.empty()) return out;
        out.resize(static_cast<std::size_t>(highest_exponent() - lowest_exponent() + 1));
        for (const auto& [e, c] : terms_) out[static_cast<std::size_t>(e - lowest_exponent())] = c;
        return out;
    }

    void add_term(Exponent e, const Integer& coeff) {
        if (coeff == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    /// Representative of the class modulo units +-t^k: lowest exponent 0 and
    /// positive leading coefficient.
    LaurentPolynomial normalized() const {
        if (terms_.empty()) return {};
        const Exponent shift = lowest_exponent();
        const bool flip = leading_coefficient() < 0;
        LaurentPolynomial out;
        for (const auto& [e, c] : terms_) out.terms_.emplace(e - shift, flip ? Integer(-c) : c);
        return out;
    }

    /// Equality up to multiplication by a unit +-t^k.
    bool associated_to(const LaurentPolynomial& other) const { return normalized() == other.normalized(); }

    Integer evaluate(const Integer& x) const {
        if (lowest_exponent() < 0) throw std::domain_error("cannot evaluate negative powers over the integers");
        Integer result = 0;
        for (const auto& [e, c] : terms_) result += c * boost::multiprecision::pow(x, static_cast<unsigned>(e));
        return result;
    }

    LaurentPolynomial operator-() const {
        LaurentPolynomial out;
        for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
        return out;
    }

    LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPolynomial& operator-=(const LaurentPolynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        LaurentPolynomial out;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
        return out;
    }
    LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = *this * o; }

    friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

    /// Human-readable form, e.g. "t^2 - 3t + 1", highest power first.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            Integer mag = abs(c);
            if (first) {
                if (c < 0) os << '-';
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            first = false;
            if (e == 0) {
                os << mag;
                continue;
            }
            if (mag != 1) os << mag;
            os << 't';
            if (e != 1) os << '^' << e;
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p) { return os << p.to_string(); }

private:
    Terms terms_;
};

}  // namespace hopfweave
