#pragma once

// Canonical representative of a plumbing tree under band reorderings that keep
// the assembled Seifert matrix upper triangular (linear extensions of the
// "is plumbed over" order). Trees are compared band by band: first the
// diagonal entry, then the gluing vector, i.e. the upper triangle of V read
// column by column.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "plumbing.hpp"

namespace hopfweave {

inline constexpr std::size_t default_canonical_cap = 10;

class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::strong_ordering compare_bands(const Band& a, const Band& b) {
    if (auto c = band_self_linking(a.sign) <=> band_self_linking(b.sign); c != 0) return c;
    return std::lexicographical_compare_three_way(a.gluing.begin(), a.gluing.end(), b.gluing.begin(),
                                                  b.gluing.end(), [](const Integer& x, const Integer& y) {
                                                      return x < y   ? std::strong_ordering::less
                                                             : x > y ? std::strong_ordering::greater
                                                                     : std::strong_ordering::equal;
                                                  });
}

/// Lexicographic order on band sequences (the order canonical_form minimizes).
inline std::strong_ordering compare_trees(const PlumbingTree& a, const PlumbingTree& b) {
    const auto& x = a.bands();
    const auto& y = b.bands();
    for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i)
        if (auto c = compare_bands(x[i], y[i]); c != 0) return c;
    return x.size() <=> y.size();
}

/// True if listing bands in `order` (order[k] = old index of new band k) keeps
/// every coupled pair in its original relative order.
inline bool is_admissible_order(const PlumbingTree& t, const std::vector<std::size_t>& order) {
    const std::size_t n = t.mu();
    if (order.size() != n) return false;
    std::vector<std::size_t> position(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        if (order[k] >= n || position[order[k]] != n) return false;
        position[order[k]] = k;
    }
    for (std::size_t later = 0; later < n; ++later)
        for (std::size_t earlier = 0; earlier < later; ++earlier)
            if (t.bands()[later].gluing[earlier] != 0 && position[earlier] > position[later]) return false;
    return true;
}

/// Applies an admissible band reordering.
inline PlumbingTree reorder(const PlumbingTree& t, const std::vector<std::size_t>& order) {
    if (!is_admissible_order(t, order)) throw std::invalid_argument("reorder: order is not admissible");
    const IntMatrix v = seifert_matrix(t);
    std::vector<Band> bands;
    bands.reserve(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
        Band b = t.bands()[order[k]];
        GluingVector g(k);
        for (std::size_t j = 0; j < k; ++j) g[j] = v(order[j], order[k]);
        b.gluing = std::move(g);
        bands.push_back(std::move(b));
    }
    return PlumbingTree(std::move(bands));
}

namespace detail {

class Canonicalizer {
public:
    explicit Canonicalizer(const PlumbingTree& t) : tree_(t), v_(seifert_matrix(t)), n_(t.mu()) {
        placed_.assign(n_, false);
    }

    std::vector<std::size_t> run() {
        order_.clear();
        current_.clear();
        have_best_ = false;
        descend();
        return best_order_;
    }

private:
    // Column segment band `i` would contribute at the next position.
    Band segment(std::size_t i) const {
        Band b;
        b.sign = tree_.bands()[i].sign;
        b.gluing.reserve(order_.size());
        for (std::size_t p : order_) b.gluing.push_back(p < i ? v_(p, i) : Integer(0));
        return b;
    }

    bool available(std::size_t i) const {
        if (placed_[i]) return false;
        for (std::size_t j = 0; j < i; ++j)
            if (!placed_[j] && v_(j, i) != 0) return false;
        return true;
    }

    // Swapping u and v is a symmetry of the whole tree.
    bool twins(std::size_t u, std::size_t w) const {
        if (tree_.bands()[u].sign != tree_.bands()[w].sign) return false;
        if (v_(u, w) != 0 || v_(w, u) != 0) return false;
        for (std::size_t z = 0; z < n_; ++z) {
            if (z == u || z == w) continue;
            if (v_(z, u) != v_(z, w) || v_(u, z) != v_(w, z)) return false;
        }
        return true;
    }

    void descend() {
        const std::size_t depth = order_.size();
        if (depth == n_) {
            have_best_ = true;
            best_ = current_;
            best_order_ = order_;
            return;
        }
        std::vector<std::size_t> candidates;
        std::vector<Band> segments;
        for (std::size_t i = 0; i < n_; ++i)
            if (available(i)) {
                candidates.push_back(i);
                segments.push_back(segment(i));
            }
        // Only candidates achieving the smallest segment can extend a minimum.
        std::size_t argmin = 0;
        for (std::size_t c = 1; c < candidates.size(); ++c)
            if (compare_bands(segments[c], segments[argmin]) < 0) argmin = c;
        const Band& smallest = segments[argmin];

        if (have_best_ && prefix_tight()) {
            auto cmp = compare_bands(smallest, best_[depth]);
            if (cmp > 0) return;
        }

        std::vector<std::size_t> tried;
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            if (compare_bands(segments[c], smallest) != 0) continue;
            const std::size_t i = candidates[c];
            if (std::any_of(tried.begin(), tried.end(), [&](std::size_t u) { return twins(u, i); })) continue;
            tried.push_back(i);
            placed_[i] = true;
            order_.push_back(i);
            current_.push_back(segments[c]);
            if (!have_best_ || !prefix_worse()) descend();
            current_.pop_back();
            order_.pop_back();
            placed_[i] = false;
        }
    }

    // current_ equals the same-length prefix of best_.
    bool prefix_tight() const {
        for (std::size_t k = 0; k < current_.size(); ++k)
            if (compare_bands(current_[k], best_[k]) != 0) return false;
        return true;
    }
    bool prefix_worse() const {
        for (std::size_t k = 0; k < current_.size(); ++k) {
            auto c = compare_bands(current_[k], best_[k]);
            if (c != 0) return c > 0;
        }
        return false;
    }

    const PlumbingTree& tree_;
    IntMatrix v_;
    std::size_t n_;
    std::vector<bool> placed_;
    std::vector<std::size_t> order_;
    std::vector<Band> current_;
    bool have_best_ = false;
    std::vector<Band> best_;
    std::vector<std::size_t> best_order_;
};

}  // namespace detail

/// Band order realizing the canonical form.
inline std::vector<std::size_t> canonical_order(const PlumbingTree& t, std::size_t cap = default_canonical_cap) {
    if (t.mu() > cap)
        throw CapExceeded("canonical_form: tree has " + std::to_string(t.mu()) + " bands, cap is " +
                          std::to_string(cap));
    return detail::Canonicalizer(t).run();
}

/// Lexicographically minimal admissible reordering; idempotent.
inline PlumbingTree canonical_form(const PlumbingTree& t, std::size_t cap = default_canonical_cap) {
    return reorder(t, canonical_order(t, cap));
}

}  // namespace hopfweave
