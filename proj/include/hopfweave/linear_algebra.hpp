#pragma once

// Exact linear algebra over the integers: determinants, Smith invariants,
// signatures, Alexander polynomials and homological monodromy. Nothing in
// here touches floating point.

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "int_matrix.hpp"
#include "integer.hpp"
#include "laurent_polynomial.hpp"

namespace hopfweave {

/// Determinant by Bareiss fraction-free elimination. The 0x0 determinant is 1.
inline Integer det_exact(const IntMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("det_exact: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Integer previous = 1;
    int sign_flip = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a(swap_row, k) == 0) ++swap_row;
            if (swap_row == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap_row, c));
            sign_flip = -sign_flip;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
            }
            a(i, k) = 0;
        }
        previous = a(k, k);
    }
    return sign_flip * a(n - 1, n - 1);
}

/// Invariant factors d1 | d2 | ... of the Smith normal form, nonzero factors
/// first and zeros last; the list has min(rows, cols) entries.
inline std::vector<Integer> smith_invariants(const IntMatrix& m) {
    IntMatrix a = m;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    const std::size_t diag = std::min(rows, cols);
    std::vector<Integer> factors;

    auto swap_rows = [&](std::size_t r1, std::size_t r2) {
        if (r1 != r2)
            for (std::size_t c = 0; c < cols; ++c) std::swap(a(r1, c), a(r2, c));
    };
    auto swap_cols = [&](std::size_t c1, std::size_t c2) {
        if (c1 != c2)
            for (std::size_t r = 0; r < rows; ++r) std::swap(a(r, c1), a(r, c2));
    };

    for (std::size_t t = 0; t < diag; ++t) {
        // Smallest nonzero entry of the trailing block becomes the pivot.
        auto place_smallest_pivot = [&]() -> bool {
            bool found = false;
            std::size_t pr = t;
            std::size_t pc = t;
            Integer best;
            for (std::size_t r = t; r < rows; ++r)
                for (std::size_t c = t; c < cols; ++c)
                    if (a(r, c) != 0 && (!found || abs(a(r, c)) < best)) {
                        found = true;
                        best = abs(a(r, c));
                        pr = r;
                        pc = c;
                    }
            if (!found) return false;
            swap_rows(t, pr);
            swap_cols(t, pc);
            return true;
        };
        if (!place_smallest_pivot()) break;

        for (;;) {
            bool clean = true;
            for (std::size_t r = t + 1; r < rows; ++r) {
                if (a(r, t) == 0) continue;
                const Integer q = a(r, t) / a(t, t);
                for (std::size_t c = t; c < cols; ++c) a(r, c) -= q * a(t, c);
                if (a(r, t) != 0) clean = false;
            }
            for (std::size_t c = t + 1; c < cols; ++c) {
                if (a(t, c) == 0) continue;
                const Integer q = a(t, c) / a(t, t);
                for (std::size_t r = t; r < rows; ++r) a(r, c) -= q * a(r, t);
                if (a(t, c) != 0) clean = false;
            }
            if (!clean) {
                place_smallest_pivot();
                continue;
            }
            // Pivot must divide the whole trailing block.
            bool divides = true;
            for (std::size_t r = t + 1; r < rows && divides; ++r)
                for (std::size_t c = t + 1; c < cols; ++c)
                    if (a(r, c) % a(t, t) != 0) {
                        for (std::size_t cc = t; cc < cols; ++cc) a(t, cc) += a(r, cc);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        factors.push_back(abs(a(t, t)));
    }
    factors.resize(diag, Integer(0));
    return factors;
}

/// Counts of positive, negative and zero eigenvalues of a symmetric matrix.
struct Inertia {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t zero = 0;

    long long signature() const { return static_cast<long long>(positive) - static_cast<long long>(negative); }
    friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Inertia by rational congruence diagonalization with pivoting.
inline Inertia inertia(const IntMatrix& s) {
    if (!s.is_symmetric()) throw std::invalid_argument("inertia: matrix is not symmetric");
    const std::size_t n = s.rows();
    std::vector<Rational> a(n * n);
    auto at = [&](std::size_t r, std::size_t c) -> Rational& { return a[r * n + c]; };
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) at(r, c) = Rational(s(r, c));

    auto swap_index = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < n; ++c) std::swap(at(i, c), at(j, c));
        for (std::size_t r = 0; r < n; ++r) std::swap(at(r, i), at(r, j));
    };

    Inertia result;
    std::size_t k = 0;
    for (; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && at(pivot, pivot) == 0) ++pivot;
        if (pivot == n) {
            // Zero diagonal: fold a nonzero off-diagonal entry onto the diagonal.
            std::size_t fi = n;
            std::size_t fj = n;
            for (std::size_t i = k; i < n && fi == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (at(i, j) != 0) {
                        fi = i;
                        fj = j;
                        break;
                    }
            if (fi == n) break;
            for (std::size_t c = 0; c < n; ++c) at(fi, c) += at(fj, c);
            for (std::size_t r = 0; r < n; ++r) at(r, fi) += at(r, fj);
            pivot = fi;
        }
        swap_index(k, pivot);
        const Rational p = at(k, k);
        for (std::size_t r = k + 1; r < n; ++r) {
            if (at(r, k) == 0) continue;
            const Rational f = at(r, k) / p;
            for (std::size_t c = k; c < n; ++c) at(r, c) -= f * at(k, c);
            for (std::size_t rr = k; rr < n; ++rr) at(rr, r) -= f * at(rr, k);
        }
        if (p > 0)
            ++result.positive;
        else
            ++result.negative;
    }
    result.zero = n - result.positive - result.negative;
    return result;
}

inline long long signature_symmetric(const IntMatrix& s) { return inertia(s).signature(); }

namespace detail {

/// Recovers the integer polynomial of degree <= n from its values at 0..n
/// via forward differences (the k-th difference is divisible by k!).
inline LaurentPolynomial interpolate_consecutive(std::vector<Integer> values) {
    const std::size_t count = values.size();
    std::vector<Integer> newton;  // coefficients on the falling factorials x(x-1)...(x-k+1)
    Integer factorial = 1;
    for (std::size_t k = 0; k < count; ++k) {
        if (k > 0) factorial *= static_cast<unsigned>(k);
        if (values.front() % factorial != 0) throw std::logic_error("interpolation: non-integral difference");
        newton.push_back(values.front() / factorial);
        for (std::size_t i = 0; i + 1 < values.size(); ++i) values[i] = values[i + 1] - values[i];
        values.pop_back();
    }
    LaurentPolynomial result;
    LaurentPolynomial falling = 1;
    for (std::size_t k = 0; k < newton.size(); ++k) {
        result += falling * LaurentPolynomial(newton[k]);
        falling *= LaurentPolynomial::from_coefficients({Integer(-static_cast<long long>(k)), Integer(1)});
    }
    return result;
}

}  // namespace detail

/// det(A + t B) for square A, B of equal size, as a polynomial in t.
inline LaurentPolynomial determinant_pencil(const IntMatrix& a, const IntMatrix& b) {
    if (!a.is_square() || a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("determinant_pencil: shape mismatch");
    const std::size_t n = a.rows();
    std::vector<Integer> values;
    for (std::size_t x = 0; x <= n; ++x) {
        IntMatrix m = a;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) m(r, c) += Integer(x) * b(r, c);
        values.push_back(det_exact(m));
    }
    return detail::interpolate_consecutive(std::move(values));
}

/// Alexander polynomial det(V - t V^T), normalized modulo units.
inline LaurentPolynomial alexander_from_seifert(const IntMatrix& v) {
    if (!v.is_square()) throw std::invalid_argument("alexander_from_seifert: matrix is not square");
    IntMatrix minus_vt = IntMatrix(v.rows(), v.cols()) - v.transpose();
    return determinant_pencil(v, minus_vt).normalized();
}

/// det(t I - h), monic, not normalized.
inline LaurentPolynomial characteristic_polynomial(const IntMatrix& h) {
    if (!h.is_square()) throw std::invalid_argument("characteristic_polynomial: matrix is not square");
    IntMatrix minus_h = IntMatrix(h.rows(), h.cols()) - h;
    return determinant_pencil(minus_h, IntMatrix::identity(h.rows()));
}

/// Solves a X = b exactly; a must be square and unimodular.
inline IntMatrix solve_unimodular(const IntMatrix& a, const IntMatrix& b) {
    if (!a.is_square() || a.rows() != b.rows()) throw std::invalid_argument("solve_unimodular: shape mismatch");
    if (abs(det_exact(a)) != 1) throw std::domain_error("solve_unimodular: matrix is not unimodular");
    const std::size_t n = a.rows();
    const std::size_t m = b.cols();
    std::vector<Rational> aug(n * (n + m));
    const std::size_t w = n + m;
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug[r * w + c] = Rational(a(r, c));
        for (std::size_t c = 0; c < m; ++c) aug[r * w + n + c] = Rational(b(r, c));
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (aug[p * w + k] == 0) ++p;
        if (p != k)
            for (std::size_t c = 0; c < w; ++c) std::swap(aug[p * w + c], aug[k * w + c]);
        const Rational pivot = aug[k * w + k];
        for (std::size_t c = k; c < w; ++c) aug[k * w + c] /= pivot;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == k || aug[r * w + k] == 0) continue;
            const Rational f = aug[r * w + k];
            for (std::size_t c = k; c < w; ++c) aug[r * w + c] -= f * aug[k * w + c];
        }
    }
    IntMatrix x(n, m);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < m; ++c) {
            const Rational& q = aug[r * w + n + c];
            if (denominator(q) != 1) throw std::logic_error("solve_unimodular: non-integral solution");
            x(r, c) = numerator(q);
        }
    return x;
}

/// Homology action of the monodromy, h = V^{-1} V^T. Requires |det V| = 1,
/// i.e. a fibered presentation.
inline IntMatrix homological_monodromy(const IntMatrix& v) {
    if (!v.is_square()) throw std::invalid_argument("homological_monodromy: matrix is not square");
    if (abs(det_exact(v)) != 1)
        throw std::domain_error("homological_monodromy: |det V| != 1, presentation is not fibered");
    return solve_unimodular(v, v.transpose());
}

/// Smallest k in [1, limit] with h^k = I, or 0 if none.
inline unsigned finite_order(const IntMatrix& h, unsigned limit) {
    const IntMatrix id = IntMatrix::identity(h.rows());
    IntMatrix p = h;
    for (unsigned k = 1; k <= limit; ++k) {
        if (p == id) return k;
        p = p * h;
    }
    return 0;
}

}  // namespace hopfweave
