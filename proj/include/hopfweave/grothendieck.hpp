#pragma once

// The Grothendieck groups of fibered links and of fibered knots in S^3, both
// identified with Z^2 through (mu, lambda).

#include <stdexcept>

#include "integer.hpp"
#include "plumbing.hpp"

namespace hopfweave {

struct GkClass {
    Integer mu;
    Integer lambda;

    friend GkClass operator+(const GkClass& a, const GkClass& b) { return {a.mu + b.mu, a.lambda + b.lambda}; }
    friend GkClass operator-(const GkClass& a, const GkClass& b) { return {a.mu - b.mu, a.lambda - b.lambda}; }
    friend GkClass operator*(const Integer& k, const GkClass& g) { return {k * g.mu, k * g.lambda}; }
    friend bool operator==(const GkClass&, const GkClass&) = default;
};

inline GkClass gk_class(const PlumbingTree& t) { return {Integer(t.mu()), Integer(t.lambda())}; }

/// Coefficients over a rank-two basis.
struct BasisCoefficients {
    Integer first;
    Integer second;

    friend bool operator==(const BasisCoefficients&, const BasisCoefficients&) = default;
};

inline const GkClass hopf_positive_class{1, 0};
inline const GkClass hopf_negative_class{1, 1};
inline const GkClass trefoil_class{2, 0};
inline const GkClass figure_eight_class{2, 1};

/// g = a [H+] + b [H-].
inline BasisCoefficients decompose_link_class(const GkClass& g) { return {g.mu - g.lambda, g.lambda}; }

inline GkClass recompose_link_class(const BasisCoefficients& c) {
    return c.first * hopf_positive_class + c.second * hopf_negative_class;
}

class ParityObstruction : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// g = a [T+] + b [E]; requires mu - 2 lambda even.
inline BasisCoefficients decompose_knot_class(const GkClass& g) {
    const Integer rest = g.mu - 2 * g.lambda;
    if (rest % 2 != 0)
        throw ParityObstruction("class (" + g.mu.str() + "," + g.lambda.str() +
                                ") has mu - 2 lambda odd and no decomposition over [T+], [E]");
    return {rest / 2, g.lambda};
}

inline GkClass recompose_knot_class(const BasisCoefficients& c) {
    return c.first * trefoil_class + c.second * figure_eight_class;
}

}  // namespace hopfweave
