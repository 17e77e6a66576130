#pragma once

// Dense Gaussian elimination over a Scalar field: exact pivoting for finite
// fields, magnitude pivoting with the field tolerance for complex doubles.

#include "semieq/field.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace semieq {

using Vec = std::vector<Scalar>;

inline Vec vec_zero(const Field& f, size_t n) { return Vec(n, f.zero()); }

inline Vec vec_add(const Vec& x, const Vec& y) {
    Vec r = x;
    for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] + y[i];
    return r;
}

inline Vec vec_sub(const Vec& x, const Vec& y) {
    Vec r = x;
    for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] - y[i];
    return r;
}

inline Vec vec_scale(const Scalar& c, const Vec& x) {
    Vec r = x;
    for (auto& e : r) e = c * e;
    return r;
}

inline bool vec_is_zero(const Vec& x) {
    return std::all_of(x.begin(), x.end(), [](const Scalar& s) { return s.is_zero(); });
}

inline bool vec_eq(const Vec& x, const Vec& y) {
    if (x.size() != y.size()) return false;
    for (size_t i = 0; i < x.size(); ++i)
        if (x[i] != y[i]) return false;
    return true;
}

// Rows of an augmented system A x = rhs.
class LinearSystem {
public:
    explicit LinearSystem(const Field& f, size_t cols) : field_(&f), cols_(cols) {}

    void add_row(Vec coeffs, Scalar rhs) {
        rows_.push_back(std::move(coeffs));
        rhs_.push_back(rhs);
    }

    // Convenience: start from a zero row, accumulate, then push.
    Vec zero_row() const { return vec_zero(*field_, cols_); }

    size_t cols() const { return cols_; }
    size_t rows() const { return rows_.size(); }
    const Field& field() const { return *field_; }

    struct Solution {
        bool consistent = false;
        Vec particular;          // valid when consistent
        std::vector<Vec> basis;  // nullspace of A
    };

    Solution solve() const {
        auto rows = rows_;
        auto rhs = rhs_;
        const Field& f = *field_;
        size_t m = rows.size(), n = cols_;
        std::vector<size_t> pivot_col;
        size_t r = 0;
        for (size_t c = 0; c < n && r < m; ++c) {
            size_t best = m;
            if (f.kind == FieldKind::ComplexFloat) {
                double bmag = f.tol;
                for (size_t i = r; i < m; ++i) {
                    double mag = std::abs(rows[i][c].z);
                    if (mag > bmag) { bmag = mag; best = i; }
                }
            } else {
                for (size_t i = r; i < m; ++i)
                    if (!rows[i][c].is_zero()) { best = i; break; }
            }
            if (best == m) continue;
            std::swap(rows[r], rows[best]);
            std::swap(rhs[r], rhs[best]);
            Scalar pinv = rows[r][c].inv();
            for (size_t j = c; j < n; ++j) rows[r][j] = pinv * rows[r][j];
            rhs[r] = pinv * rhs[r];
            for (size_t i = 0; i < m; ++i) {
                if (i == r) continue;
                Scalar factor = rows[i][c];
                if (factor.is_zero()) continue;
                for (size_t j = c; j < n; ++j) rows[i][j] = rows[i][j] - factor * rows[r][j];
                rhs[i] = rhs[i] - factor * rhs[r];
            }
            pivot_col.push_back(c);
            ++r;
        }
        Solution sol;
        for (size_t i = r; i < m; ++i)
            if (!rhs[i].is_zero()) return sol; // inconsistent
        sol.consistent = true;
        sol.particular = vec_zero(f, n);
        for (size_t i = 0; i < r; ++i) sol.particular[pivot_col[i]] = rhs[i];
        std::vector<bool> is_pivot(n, false);
        for (size_t c : pivot_col) is_pivot[c] = true;
        for (size_t c = 0; c < n; ++c) {
            if (is_pivot[c]) continue;
            Vec v = vec_zero(f, n);
            v[c] = f.one();
            for (size_t i = 0; i < r; ++i) v[pivot_col[i]] = -rows[i][c];
            sol.basis.push_back(std::move(v));
        }
        return sol;
    }

    std::vector<Vec> nullspace() const { return solve().basis; }

private:
    const Field* field_;
    size_t cols_;
    std::vector<Vec> rows_;
    std::vector<Scalar> rhs_;
};

// Rank of a list of equal-length vectors; when rank < count also reports one
// nontrivial dependency (coefficients c with sum c_i v_i = 0).
struct RankResult {
    size_t rank = 0;
    std::optional<Vec> dependency;
};

inline RankResult linear_rank(const std::vector<Vec>& vs) {
    RankResult res;
    if (vs.empty()) return res;
    const Field& f = *vs[0][0].field;
    size_t len = vs[0].size();
    // Columns = the input vectors; a kernel vector of this system is a
    // dependency among them.
    LinearSystem sys(f, vs.size());
    for (size_t i = 0; i < len; ++i) {
        Vec row = sys.zero_row();
        for (size_t j = 0; j < vs.size(); ++j) row[j] = vs[j][i];
        sys.add_row(std::move(row), f.zero());
    }
    auto ns = sys.nullspace();
    res.rank = vs.size() - ns.size();
    if (!ns.empty()) res.dependency = ns.front();
    return res;
}

// Exact/tolerated solve of target = sum c_i basis_i; returns the coefficients.
inline std::optional<Vec> express_in_span(const std::vector<Vec>& basis, const Vec& target) {
    if (basis.empty()) return vec_is_zero(target) ? std::optional<Vec>(Vec{}) : std::nullopt;
    const Field& f = *target[0].field;
    LinearSystem sys(f, basis.size());
    for (size_t i = 0; i < target.size(); ++i) {
        Vec row = sys.zero_row();
        for (size_t j = 0; j < basis.size(); ++j) row[j] = basis[j][i];
        sys.add_row(std::move(row), target[i]);
    }
    auto sol = sys.solve();
    if (!sol.consistent) return std::nullopt;
    return sol.particular;
}

// Fit target = c * base; requires base != 0. Returns nullopt when no single
// scalar works.
inline std::optional<Scalar> fit_scale(const Vec& base, const Vec& target) {
    const Field& f = *base[0].field;
    size_t best = base.size();
    if (f.kind == FieldKind::ComplexFloat) {
        double bmag = f.tol;
        for (size_t i = 0; i < base.size(); ++i) {
            double mag = std::abs(base[i].z);
            if (mag > bmag) { bmag = mag; best = i; }
        }
    } else {
        for (size_t i = 0; i < base.size(); ++i)
            if (!base[i].is_zero()) { best = i; break; }
    }
    if (best == base.size()) return std::nullopt;
    Scalar c = target[best] / base[best];
    if (vec_eq(target, vec_scale(c, base))) return c;
    return std::nullopt;
}

} // namespace semieq
