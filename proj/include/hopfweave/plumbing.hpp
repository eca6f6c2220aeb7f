#pragma once

// Plumbing trees of Hopf bands. A tree is an ordered list of bands; band k
// carries a gluing vector of length k (0-based) recording its coupling with
// every earlier band. The assembled Seifert matrix is upper triangular with
// diagonal -1 for a positive band and +1 for a negative band, so every tree
// presents a fibered link (|det V| = 1).

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "int_matrix.hpp"
#include "integer.hpp"
#include "laurent_polynomial.hpp"
#include "linear_algebra.hpp"

namespace hopfweave {

enum class BandSign { positive, negative };

inline char sign_char(BandSign s) { return s == BandSign::positive ? '+' : '-'; }

inline BandSign parse_sign(std::string_view text) {
    if (text == "+") return BandSign::positive;
    if (text == "-") return BandSign::negative;
    throw std::invalid_argument("band sign must be \"+\" or \"-\", got \"" + std::string(text) + "\"");
}

/// Seifert self-linking of a Hopf band core.
inline int band_self_linking(BandSign s) { return s == BandSign::positive ? -1 : 1; }

using GluingVector = std::vector<Integer>;

struct Band {
    BandSign sign = BandSign::positive;
    GluingVector gluing;
    std::optional<std::string> label;

    /// Labels are reporting metadata and do not take part in equality.
    friend bool operator==(const Band& a, const Band& b) { return a.sign == b.sign && a.gluing == b.gluing; }
};

class PlumbingTree {
public:
    PlumbingTree() = default;

    /// Validates that band k has a gluing vector of length k.
    explicit PlumbingTree(std::vector<Band> bands) : bands_(std::move(bands)) {
        for (std::size_t k = 0; k < bands_.size(); ++k)
            if (bands_[k].gluing.size() != k)
                throw std::invalid_argument("band " + std::to_string(k + 1) + " has gluing vector of length " +
                                            std::to_string(bands_[k].gluing.size()) + ", expected " +
                                            std::to_string(k));
    }

    const std::vector<Band>& bands() const noexcept { return bands_; }
    std::size_t mu() const noexcept { return bands_.size(); }
    std::size_t lambda() const noexcept {
        return static_cast<std::size_t>(
            std::count_if(bands_.begin(), bands_.end(), [](const Band& b) { return b.sign == BandSign::negative; }));
    }
    bool empty() const noexcept { return bands_.empty(); }

    friend bool operator==(const PlumbingTree&, const PlumbingTree&) = default;

private:
    std::vector<Band> bands_;
};

/// The trivial open book of the unknot: no bands.
inline PlumbingTree unknot() { return {}; }

/// Plumbs one Hopf band whose core couples to the existing bands by x.
inline PlumbingTree hopf_plumb(const PlumbingTree& t, BandSign sign, GluingVector x,
                               std::optional<std::string> label = std::nullopt) {
    if (x.size() != t.mu())
        throw std::invalid_argument("hopf_plumb: gluing vector has length " + std::to_string(x.size()) +
                                    ", expected " + std::to_string(t.mu()));
    std::vector<Band> bands = t.bands();
    bands.push_back(Band{sign, std::move(x), std::move(label)});
    return PlumbingTree(std::move(bands));
}

inline PlumbingTree hopf_band(BandSign sign) { return hopf_plumb(unknot(), sign, {}); }

/// Plumbs two trees; x is the mu(t1) x mu(t2) coupling block placed above
/// the second tree's diagonal block.
inline PlumbingTree plumb(const PlumbingTree& t1, const PlumbingTree& t2, const IntMatrix& x) {
    if (x.rows() != t1.mu() || x.cols() != t2.mu())
        throw std::invalid_argument("plumb: coupling matrix is " + std::to_string(x.rows()) + "x" +
                                    std::to_string(x.cols()) + ", expected " + std::to_string(t1.mu()) + "x" +
                                    std::to_string(t2.mu()));
    std::vector<Band> bands = t1.bands();
    for (std::size_t j = 0; j < t2.mu(); ++j) {
        Band b = t2.bands()[j];
        GluingVector g = x.column(j);
        g.insert(g.end(), b.gluing.begin(), b.gluing.end());
        b.gluing = std::move(g);
        bands.push_back(std::move(b));
    }
    return PlumbingTree(std::move(bands));
}

inline PlumbingTree plumb(const PlumbingTree& t1, const PlumbingTree& t2) {
    return plumb(t1, t2, IntMatrix(t1.mu(), t2.mu()));
}

enum class KnotKind { trefoil, figure_eight };

/// T+- or E-plumbing: a positive band on x, then a second band crossing the
/// first once (c = +-1), positive for T+ and negative for E.
inline PlumbingTree knot_plumb(const PlumbingTree& t, KnotKind kind, GluingVector x, const Integer& c) {
    if (abs(c) != 1) throw std::invalid_argument("knot_plumb: crossing coefficient must be +1 or -1");
    PlumbingTree first = hopf_plumb(t, BandSign::positive, std::move(x));
    GluingVector second(first.mu(), Integer(0));
    second.back() = c;
    return hopf_plumb(first, kind == KnotKind::trefoil ? BandSign::positive : BandSign::negative, std::move(second));
}

inline bool is_removable(const PlumbingTree& t, std::size_t index) {
    if (index >= t.mu()) return false;
    for (std::size_t k = index + 1; k < t.mu(); ++k)
        if (t.bands()[k].gluing[index] != 0) return false;
    return true;
}

/// Removes band `index` (0-based). Fails if a later band is plumbed over it.
inline PlumbingTree deplumb(const PlumbingTree& t, std::size_t index) {
    if (index >= t.mu())
        throw std::out_of_range("deplumb: band " + std::to_string(index + 1) + " does not exist");
    if (!is_removable(t, index))
        throw std::invalid_argument("deplumb: band " + std::to_string(index + 1) + " is still plumbed over");
    std::vector<Band> bands;
    bands.reserve(t.mu() - 1);
    for (std::size_t k = 0; k < t.mu(); ++k) {
        if (k == index) continue;
        Band b = t.bands()[k];
        if (k > index) b.gluing.erase(b.gluing.begin() + static_cast<std::ptrdiff_t>(index));
        bands.push_back(std::move(b));
    }
    return PlumbingTree(std::move(bands));
}

inline IntMatrix seifert_matrix(const PlumbingTree& t) {
    const std::size_t n = t.mu();
    IntMatrix v(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const Band& b = t.bands()[k];
        v(k, k) = band_self_linking(b.sign);
        for (std::size_t j = 0; j < k; ++j) v(j, k) = b.gluing[j];
    }
    return v;
}

/// Data that must agree between presentations of the same open book.
struct Fingerprint {
    std::size_t mu = 0;
    std::size_t lambda = 0;
    LaurentPolynomial alexander;
    long long sigma = 0;
    std::vector<Integer> symmetrized_smith;  // Smith invariants of V + V^T
    std::vector<Integer> monodromy_smith;    // Smith invariants of h - I

    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

struct InvariantReport {
    std::size_t mu = 0;
    std::size_t lambda = 0;
    LaurentPolynomial alexander;
    long long sigma = 0;
    Integer det_v;
    Fingerprint fingerprint;

    friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

inline InvariantReport invariants(const PlumbingTree& t) {
    const IntMatrix v = seifert_matrix(t);
    const IntMatrix symmetrized = v + v.transpose();
    const IntMatrix h = homological_monodromy(v);

    InvariantReport r;
    r.mu = t.mu();
    r.lambda = t.lambda();
    r.alexander = alexander_from_seifert(v);
    r.sigma = signature_symmetric(symmetrized);
    r.det_v = det_exact(v);
    r.fingerprint = Fingerprint{r.mu,
                                r.lambda,
                                r.alexander,
                                r.sigma,
                                smith_invariants(symmetrized),
                                smith_invariants(h - IntMatrix::identity(h.rows()))};
    return r;
}

}  // namespace hopfweave
