#pragma once

// Homotopy bookkeeping for oriented plane fields on a closed oriented
// three-manifold, described only through H_1(M; Z).
//
// A class is stored in an absolute chart relative to the manifold's reference
// field: the obstruction class c in H_1, the Euler class (as an H_1 element by
// duality) and an integer framing, the pi_3(S^2) = Z coordinate. Two classes
// with the same c and Euler class are equal iff their framings agree modulo the
// divisibility |xi| of the torsion-free part of the Euler class.

#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "integer.hpp"
#include "plumbing.hpp"

namespace hopfweave {

/// H_1(M; Z) = Z/d_1 + ... + Z/d_k with d = 0 for a free summand.
class ManifoldModel {
public:
    ManifoldModel() = default;
    ManifoldModel(std::string name, std::vector<Integer> factors) : name_(std::move(name)), factors_(std::move(factors)) {
        Integer previous = 0;
        for (const Integer& d : factors_) {
            if (d < 0) throw std::invalid_argument("manifold " + name_ + ": negative invariant factor");
            if (d == 1) throw std::invalid_argument("manifold " + name_ + ": invariant factor 1 is a trivial summand");
            if (d == 0) continue;
            if (previous != 0 && d % previous != 0)
                throw std::invalid_argument("manifold " + name_ + ": torsion factors must form a divisibility chain");
            previous = d;
        }
    }

    /// Integral homology sphere with the trivial open book's field as reference.
    static ManifoldModel sphere() { return {"S3", {}}; }

    const std::string& name() const noexcept { return name_; }
    const std::vector<Integer>& factors() const noexcept { return factors_; }
    std::size_t rank() const noexcept { return factors_.size(); }
    bool is_homology_sphere() const noexcept { return factors_.empty(); }

    /// Homological data only; names are labels.
    friend bool operator==(const ManifoldModel& a, const ManifoldModel& b) { return a.factors_ == b.factors_; }

private:
    std::string name_;
    std::vector<Integer> factors_;
};

/// Element of H_1, coefficient i reduced modulo factor i (free factors unreduced).
class H1Element {
public:
    H1Element() = default;
    H1Element(const ManifoldModel& m, std::vector<Integer> coefficients) : coefficients_(std::move(coefficients)) {
        if (coefficients_.size() != m.rank())
            throw std::invalid_argument("H1 element has " + std::to_string(coefficients_.size()) +
                                        " coefficients, manifold " + m.name() + " has rank " +
                                        std::to_string(m.rank()));
        for (std::size_t i = 0; i < coefficients_.size(); ++i)
            if (m.factors()[i] != 0) coefficients_[i] = mod_floor(coefficients_[i], m.factors()[i]);
    }

    static H1Element zero(const ManifoldModel& m) { return {m, std::vector<Integer>(m.rank())}; }

    const std::vector<Integer>& coefficients() const noexcept { return coefficients_; }
    bool is_zero() const {
        return std::all_of(coefficients_.begin(), coefficients_.end(), [](const Integer& v) { return v == 0; });
    }

    static H1Element difference(const ManifoldModel& m, const H1Element& a, const H1Element& b) {
        std::vector<Integer> out(a.coefficients_.size());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coefficients_[i] - b.coefficients_[i];
        return {m, std::move(out)};
    }
    static H1Element sum(const ManifoldModel& m, const H1Element& a, const H1Element& b) {
        std::vector<Integer> out(a.coefficients_.size());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coefficients_[i] + b.coefficients_[i];
        return {m, std::move(out)};
    }

    friend bool operator==(const H1Element&, const H1Element&) = default;

private:
    std::vector<Integer> coefficients_;
};

class PlaneFieldClass {
public:
    PlaneFieldClass(ManifoldModel manifold, H1Element c, H1Element euler, Integer framing)
        : manifold_(std::move(manifold)), c_(std::move(c)), euler_(std::move(euler)), framing_(std::move(framing)) {
        // Re-reduce against this manifold so mismatched ranks are caught here.
        c_ = H1Element(manifold_, c_.coefficients());
        euler_ = H1Element(manifold_, euler_.coefficients());
    }

    /// The manifold's reference field: c = 0, e = 0, framing 0.
    static PlaneFieldClass reference(const ManifoldModel& m) {
        return {m, H1Element::zero(m), H1Element::zero(m), 0};
    }

    const ManifoldModel& manifold() const noexcept { return manifold_; }
    const H1Element& c() const noexcept { return c_; }
    const H1Element& euler() const noexcept { return euler_; }
    const Integer& framing() const noexcept { return framing_; }

    PlaneFieldClass with_framing(Integer framing) const {
        PlaneFieldClass copy = *this;
        copy.framing_ = std::move(framing);
        return copy;
    }

    /// Equality of homotopy classes (framing compared modulo |xi|).
    bool homotopic_to(const PlaneFieldClass& other) const;

    /// Chart equality, framing compared as an integer.
    friend bool operator==(const PlaneFieldClass&, const PlaneFieldClass&) = default;

private:
    ManifoldModel manifold_;
    H1Element c_;
    H1Element euler_;
    Integer framing_;
};

inline void require_same_manifold(const PlaneFieldClass& a, const PlaneFieldClass& b, const char* op) {
    if (!(a.manifold() == b.manifold()))
        throw std::invalid_argument(std::string(op) + ": plane fields live on different manifolds (" +
                                    a.manifold().name() + ", " + b.manifold().name() + ")");
}

/// c(xi, eta) = eta.c - xi.c.
inline H1Element obstruction_class(const PlaneFieldClass& xi, const PlaneFieldClass& eta) {
    require_same_manifold(xi, eta, "obstruction_class");
    return H1Element::difference(xi.manifold(), eta.c(), xi.c());
}

inline bool homologous(const PlaneFieldClass& xi, const PlaneFieldClass& eta) {
    return obstruction_class(xi, eta).is_zero();
}

/// |xi|: gcd of the Euler coefficients on free summands, 0 when they all vanish.
inline Integer euler_divisibility(const PlaneFieldClass& xi) {
    Integer g = 0;
    const auto& factors = xi.manifold().factors();
    for (std::size_t i = 0; i < factors.size(); ++i)
        if (factors[i] == 0) g = gcd(g, xi.euler().coefficients()[i]);
    return g;
}

inline bool PlaneFieldClass::homotopic_to(const PlaneFieldClass& other) const {
    require_same_manifold(*this, other, "homotopic_to");
    if (!(c_ == other.c_) || !(euler_ == other.euler_)) return false;
    const Integer m = euler_divisibility(*this);
    const Integer diff = other.framing_ - framing_;
    return m == 0 ? diff == 0 : diff % m == 0;
}

/// Element of Z/modulus, or of Z when modulus is 0.
struct FramingResidue {
    Integer value;
    Integer modulus;

    friend bool operator==(const FramingResidue&, const FramingResidue&) = default;
};

/// d(xi, eta): the pi_3(S^2) shift taking xi to eta.
inline FramingResidue relative_framing(const PlaneFieldClass& xi, const PlaneFieldClass& eta) {
    if (!homologous(xi, eta)) throw std::invalid_argument("relative_framing: plane fields are not homologous");
    if (!(xi.euler() == eta.euler()))
        throw std::invalid_argument("relative_framing: homologous fields with different Euler classes");
    const Integer m = euler_divisibility(xi);
    const Integer diff = eta.framing() - xi.framing();
    return {m == 0 ? diff : mod_floor(diff, m), m};
}

/// Action of k in pi_3(S^2) = Z.
inline PlaneFieldClass act_pi3(const Integer& k, const PlaneFieldClass& xi) {
    return xi.with_framing(xi.framing() + k);
}

/// Effect of plumbing one Hopf band on the associated plane field: H+
/// preserves the homotopy class, H- shifts it by one.
inline PlaneFieldClass plumb_effect(const PlaneFieldClass& xi, BandSign sign) {
    return sign == BandSign::positive ? xi : act_pi3(1, xi);
}

/// An open book given by a plumbing presentation built on a base book whose
/// plane field is `base`.
struct OpenBookClass {
    PlumbingTree tree;
    PlaneFieldClass field;
};

inline OpenBookClass open_book(PlumbingTree tree, const PlaneFieldClass& base) {
    PlaneFieldClass field = base;
    for (const Band& b : tree.bands()) field = plumb_effect(field, b.sign);
    return {std::move(tree), std::move(field)};
}

/// Book on the sphere model, built on the trivial open book of the unknot.
inline OpenBookClass sphere_book(PlumbingTree tree) {
    return open_book(std::move(tree), PlaneFieldClass::reference(ManifoldModel::sphere()));
}

/// The standard contact structure of S^3, i.e. the class of the unknot's book.
inline PlaneFieldClass standard_sphere_class() { return PlaneFieldClass::reference(ManifoldModel::sphere()); }

struct EquivalenceVerdict {
    bool equivalent = false;
    std::optional<Integer> hminus_budget;  // present iff equivalent

    friend bool operator==(const EquivalenceVerdict&, const EquivalenceVerdict&) = default;
};

/// Two books admit isotopic stabilizations iff their fields are homologous.
/// When they do, at most 2 + min{d(xi, xi'), d(xi', xi)} H- plumbings suffice.
inline EquivalenceVerdict stable_equivalence(const OpenBookClass& a, const OpenBookClass& b) {
    require_same_manifold(a.field, b.field, "stable_equivalence");
    if (!homologous(a.field, b.field)) return {false, std::nullopt};
    const FramingResidue forward = relative_framing(a.field, b.field);
    const FramingResidue backward = relative_framing(b.field, a.field);
    const Integer cheaper =
        forward.modulus == 0 ? abs(forward.value) : std::min(forward.value, backward.value);
    return {true, 2 + cheaper};
}

/// Class in pi_3(S^2) = Z of standardly embedded framed circles in a ball,
/// the i-th twisted u_i times.
inline Integer pontryagin_class(std::span<const Integer> twists) {
    return std::accumulate(twists.begin(), twists.end(), Integer(0));
}

}  // namespace hopfweave
