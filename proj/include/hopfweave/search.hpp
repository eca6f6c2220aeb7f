#pragma once

// Bounded search for explicit common stabilizations. Both presentations are
// grown by Hopf plumbings only; a certificate is a pair of move sequences
// after which the two trees have the same canonical form.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "canonical_form.hpp"
#include "plumbing.hpp"

namespace hopfweave {

struct SearchConfig {
    std::size_t max_moves_per_side = 1;
    long long coord_bound = 1;  // gluing entries range over [-bound, bound]
    std::size_t mu_cap = default_canonical_cap;
    bool deterministic_order = true;
    bool prune = true;  // (mu, lambda) balance pruning; off only for cross-checks
};

struct Move {
    BandSign sign = BandSign::positive;
    GluingVector gluing;

    friend bool operator==(const Move&, const Move&) = default;
};

using MoveSequence = std::vector<Move>;

struct StabilizationCertificate {
    MoveSequence left;
    MoveSequence right;
    PlumbingTree matched;
    std::size_t budget_used = 0;  // H- moves over both sides

    friend bool operator==(const StabilizationCertificate&, const StabilizationCertificate&) = default;
};

struct SearchStats {
    std::size_t leaves_left = 0;
    std::size_t leaves_right = 0;
    std::size_t splits_tried = 0;
};

inline PlumbingTree apply_moves(PlumbingTree t, const MoveSequence& moves) {
    for (const Move& m : moves) t = hopf_plumb(t, m.sign, m.gluing);
    return t;
}

inline std::size_t count_negative(const MoveSequence& moves) {
    return static_cast<std::size_t>(
        std::count_if(moves.begin(), moves.end(), [](const Move& m) { return m.sign == BandSign::negative; }));
}

namespace detail {

struct TreeLess {
    bool operator()(const PlumbingTree& a, const PlumbingTree& b) const { return compare_trees(a, b) < 0; }
};

/// Coordinate values in enumeration order: 0, 1, -1, 2, -2, ...
inline std::vector<Integer> coordinate_values(long long bound) {
    std::vector<Integer> values{0};
    for (long long k = 1; k <= bound; ++k) {
        values.emplace_back(k);
        values.emplace_back(-k);
    }
    return values;
}

/// All moves available on a tree with `mu` bands, in enumeration order:
/// positive before negative, then gluing vectors as an odometer whose first
/// coordinate is most significant.
inline std::vector<Move> moves_for(std::size_t mu, const std::vector<Integer>& values) {
    std::size_t combos = 1;
    for (std::size_t i = 0; i < mu; ++i) combos *= values.size();
    std::vector<Move> out;
    out.reserve(2 * combos);
    for (BandSign sign : {BandSign::positive, BandSign::negative})
        for (std::size_t index = 0; index < combos; ++index) {
            Move m{sign, GluingVector(mu)};
            std::size_t rest = index;
            for (std::size_t i = mu; i-- > 0;) {
                m.gluing[i] = values[rest % values.size()];
                rest /= values.size();
            }
            out.push_back(std::move(m));
        }
    return out;
}

/// Depth-first enumeration of all move sequences of exactly `depth` moves
/// whose negative count lands in [neg_lo, neg_hi].
class SequenceEnumerator {
public:
    using Visitor = std::function<bool(const PlumbingTree& canonical, const MoveSequence& moves)>;

    SequenceEnumerator(const SearchConfig& cfg, std::size_t neg_lo, std::size_t neg_hi)
        : cfg_(cfg), values_(coordinate_values(cfg.coord_bound)), neg_lo_(neg_lo), neg_hi_(neg_hi) {}

    /// Visits leaves in enumeration order; stops early when the visitor returns true.
    bool run(const PlumbingTree& start, std::size_t depth, const Visitor& visit, std::size_t& leaves) {
        MoveSequence moves;
        return descend(start, depth, 0, moves, visit, leaves);
    }

private:
    bool descend(const PlumbingTree& t, std::size_t remaining, std::size_t negatives, MoveSequence& moves,
                 const Visitor& visit, std::size_t& leaves) {
        if (cfg_.prune && (negatives > neg_hi_ || negatives + remaining < neg_lo_)) return false;
        if (remaining == 0) {
            if (negatives < neg_lo_ || negatives > neg_hi_) return false;
            ++leaves;
            return visit(canonical_form(t, cfg_.mu_cap), moves);
        }
        for (const Move& m : moves_for(t.mu(), values_)) {
            moves.push_back(m);
            const bool done = descend(hopf_plumb(t, m.sign, m.gluing), remaining - 1,
                                      negatives + (m.sign == BandSign::negative ? 1 : 0), moves, visit, leaves);
            moves.pop_back();
            if (done) return true;
        }
        return false;
    }

    const SearchConfig& cfg_;
    std::vector<Integer> values_;
    std::size_t neg_lo_;
    std::size_t neg_hi_;
};

}  // namespace detail

/// Iterative deepening over the total number of moves, then over the split
/// (left moves ascending). Returns nullopt when the bounded search space holds
/// no certificate; that says nothing beyond the searched bounds.
inline std::optional<StabilizationCertificate> common_stabilization(const PlumbingTree& t1, const PlumbingTree& t2,
                                                                    const SearchConfig& cfg,
                                                                    SearchStats* stats = nullptr) {
    if (cfg.coord_bound < 0) throw std::invalid_argument("common_stabilization: negative coordinate bound");
    if (t1.mu() + cfg.max_moves_per_side > cfg.mu_cap || t2.mu() + cfg.max_moves_per_side > cfg.mu_cap)
        throw CapExceeded("common_stabilization: trees may grow past mu cap " + std::to_string(cfg.mu_cap));

    SearchStats local;
    SearchStats& st = stats ? *stats : local;
    const long long lambda_gap = static_cast<long long>(t2.lambda()) - static_cast<long long>(t1.lambda());
    const std::size_t max = cfg.max_moves_per_side;

    for (std::size_t total = 0; total <= 2 * max; ++total) {
        for (std::size_t k1 = 0; k1 <= total; ++k1) {
            const std::size_t k2 = total - k1;
            if (k1 > max || k2 > max) continue;

            // Equal canonical forms need equal mu and equal lambda:
            // n1 - n2 = lambda_gap with 0 <= n_i <= k_i.
            std::size_t lo1 = 0;
            std::size_t hi1 = k1;
            if (cfg.prune) {
                if (t1.mu() + k1 != t2.mu() + k2) continue;
                const long long lo = std::max<long long>(0, lambda_gap);
                const long long hi = std::min<long long>(static_cast<long long>(k1),
                                                         lambda_gap + static_cast<long long>(k2));
                if (lo > hi) continue;
                lo1 = static_cast<std::size_t>(lo);
                hi1 = static_cast<std::size_t>(hi);
            }
            ++st.splits_tried;

            std::map<PlumbingTree, MoveSequence, detail::TreeLess> right_forms;
            {
                std::size_t lo2 = 0;
                std::size_t hi2 = k2;
                if (cfg.prune) {
                    lo2 = static_cast<std::size_t>(std::max<long long>(0, static_cast<long long>(lo1) - lambda_gap));
                    hi2 = static_cast<std::size_t>(
                        std::min<long long>(static_cast<long long>(k2), static_cast<long long>(hi1) - lambda_gap));
                }
                detail::SequenceEnumerator right(cfg, lo2, hi2);
                right.run(
                    t2, k2,
                    [&](const PlumbingTree& canonical, const MoveSequence& moves) {
                        right_forms.try_emplace(canonical, moves);
                        return false;
                    },
                    st.leaves_right);
            }
            if (right_forms.empty()) continue;

            std::optional<StabilizationCertificate> found;
            detail::SequenceEnumerator left(cfg, lo1, hi1);
            left.run(
                t1, k1,
                [&](const PlumbingTree& canonical, const MoveSequence& moves) {
                    auto it = right_forms.find(canonical);
                    if (it == right_forms.end()) return false;
                    found = StabilizationCertificate{moves, it->second, canonical,
                                                     count_negative(moves) + count_negative(it->second)};
                    return true;
                },
                st.leaves_left);
            if (found) return found;
        }
    }
    return std::nullopt;
}

/// Independent replay of a certificate; never throws.
inline bool verify_certificate(const PlumbingTree& t1, const PlumbingTree& t2, const StabilizationCertificate& cert,
                               std::size_t cap = default_canonical_cap) {
    try {
        const PlumbingTree a = apply_moves(t1, cert.left);
        const PlumbingTree b = apply_moves(t2, cert.right);
        const PlumbingTree ca = canonical_form(a, cap);
        const PlumbingTree cb = canonical_form(b, cap);
        if (!(ca == cb) || !(ca == cert.matched)) return false;
        if (!(canonical_form(cert.matched, cap) == cert.matched)) return false;
        if (!(invariants(a) == invariants(b))) return false;
        return cert.budget_used == count_negative(cert.left) + count_negative(cert.right);
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace hopfweave
