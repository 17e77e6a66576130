#pragma once

// Functions S -> K as dense value vectors, the even/odd calculus, and
// enumeration of multiplicative functions.

#include "semieq/field.hpp"
#include "semieq/linalg.hpp"
#include "semieq/semigroup.hpp"

#include <functional>
#include <optional>
#include <utility>

namespace semieq {

struct Func {
    const Field* field = nullptr;
    Vec values;

    Func() = default;
    Func(const Field& f, Vec v) : field(&f), values(std::move(v)) {}

    static Func zero(const Field& f, int n) { return Func(f, vec_zero(f, static_cast<size_t>(n))); }

    static Func from_ints(const Field& f, const std::vector<long long>& vals) {
        Vec v;
        v.reserve(vals.size());
        for (long long x : vals) v.push_back(f.from_int(x));
        return Func(f, std::move(v));
    }

    size_t size() const { return values.size(); }
    const Scalar& operator[](int i) const { return values[static_cast<size_t>(i)]; }
    Scalar& operator[](int i) { return values[static_cast<size_t>(i)]; }

    bool is_zero() const { return vec_is_zero(values); }
    bool operator==(const Func& o) const { return vec_eq(values, o.values); }
    bool operator!=(const Func& o) const { return !(*this == o); }

    Func compose(const Involution& sigma) const {
        Func r = *this;
        for (size_t i = 0; i < values.size(); ++i)
            r.values[i] = values[static_cast<size_t>(sigma(static_cast<int>(i)))];
        return r;
    }

    bool zero_on(const std::vector<int>& subset) const {
        for (int i : subset)
            if (!values[static_cast<size_t>(i)].is_zero()) return false;
        return true;
    }

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < values.size(); ++i) {
            if (i) s += ",";
            s += values[i].str();
        }
        return s + ")";
    }
};

inline Func operator+(const Func& x, const Func& y) { return Func(*x.field, vec_add(x.values, y.values)); }
inline Func operator-(const Func& x, const Func& y) { return Func(*x.field, vec_sub(x.values, y.values)); }
inline Func operator*(const Scalar& c, const Func& x) { return Func(*x.field, vec_scale(c, x.values)); }
inline Func operator-(const Func& x) { return (-x.field->one()) * x; }

struct EvenOddPair {
    Func even, odd;
};

// f = even + odd with even∘σ = even, odd∘σ = -odd; needs 1/2, hence the
// global char != 2 restriction.
inline EvenOddPair even_odd_decompose(const Func& f, const Involution& sigma) {
    Func fs = f.compose(sigma);
    Scalar half = f.field->from_int(2).inv();
    return {half * (f + fs), half * (f - fs)};
}

inline bool is_even(const Func& f, const Involution& sigma) { return f.compose(sigma) == f; }
inline bool is_odd(const Func& f, const Involution& sigma) { return f.compose(sigma) == -f; }

inline bool is_multiplicative(const Semigroup& s, const Func& m) {
    for (int x = 0; x < s.order(); ++x)
        for (int y = 0; y < s.order(); ++y)
            if (m[s.op(x, y)] != m[x] * m[y]) return false;
    return true;
}

// Complete list of multiplicative functions over a finite field, zero
// function included. Depth-first assignment with pair-constraint pruning.
inline std::vector<Func> enumerate_multiplicative(const Semigroup& s, const Field& field) {
    if (!field.finite()) throw FieldError("multiplicative enumeration needs a finite field");
    int n = s.order();
    size_t q = field.size();
    std::vector<Func> out;
    Func cur = Func::zero(field, n);
    std::function<void(int)> rec = [&](int k) {
        if (k == n) {
            out.push_back(cur);
            return;
        }
        for (size_t idx = 0; idx < q; ++idx) {
            cur[k] = field.element(idx);
            bool ok = true;
            for (int x = 0; x <= k && ok; ++x)
                for (int y = 0; y <= k && ok; ++y) {
                    int xy = s.op(x, y);
                    if (xy <= k && cur[xy] != cur[x] * cur[y]) ok = false;
                }
            if (ok) rec(k + 1);
        }
    };
    rec(0);
    return out;
}

// Multiplicative functions with complex values on a small table. Values are
// constrained to 0 or roots of unity by the eventual periodicity of each
// element's power sequence, so a finite candidate search is complete.
inline std::vector<Func> complex_characters(const Semigroup& s, const Field& field) {
    if (field.kind != FieldKind::ComplexFloat)
        throw FieldError("complex_characters needs a complex field");
    int n = s.order();
    // Period of x: smallest d with x^(i+d) = x^i for some index i.
    auto period = [&](int x) {
        std::vector<int> seen;
        int cur = x;
        while (true) {
            auto it = std::find(seen.begin(), seen.end(), cur);
            if (it != seen.end()) return static_cast<int>(seen.end() - it);
            seen.push_back(cur);
            cur = s.op(cur, x);
        }
    };
    std::vector<std::vector<Scalar>> candidates(static_cast<size_t>(n));
    const double pi = 3.14159265358979323846;
    for (int x = 0; x < n; ++x) {
        int d = period(x);
        candidates[static_cast<size_t>(x)].push_back(field.zero());
        for (int k = 0; k < d; ++k) {
            double th = 2 * pi * k / d;
            candidates[static_cast<size_t>(x)].push_back(
                Scalar::complex_value(field, {std::cos(th), std::sin(th)}));
        }
    }
    std::vector<Func> out;
    Func cur = Func::zero(field, n);
    std::function<void(int)> rec = [&](int k) {
        if (k == n) {
            for (const auto& prev : out)
                if (prev == cur) return;
            out.push_back(cur);
            return;
        }
        for (const Scalar& c : candidates[static_cast<size_t>(k)]) {
            cur[k] = c;
            bool ok = true;
            for (int x = 0; x <= k && ok; ++x)
                for (int y = 0; y <= k && ok; ++y) {
                    int xy = s.op(x, y);
                    if (xy <= k && cur[xy] != cur[x] * cur[y]) ok = false;
                }
            if (ok) rec(k + 1);
        }
    };
    rec(0);
    return out;
}

// Multiplicative functions regardless of field kind.
inline std::vector<Func> multiplicative_functions(const Semigroup& s, const Field& field) {
    return field.finite() ? enumerate_multiplicative(s, field) : complex_characters(s, field);
}

struct CentralityResult {
    bool central = true;
    int wx = -1, wy = -1; // witness pair when not central
};

inline CentralityResult is_central(const Func& f, const Semigroup& s) {
    for (int x = 0; x < s.order(); ++x)
        for (int y = 0; y < s.order(); ++y)
            if (f[s.op(x, y)] != f[s.op(y, x)]) return {false, x, y};
    return {};
}

inline RankResult func_rank(const std::vector<Func>& fs) {
    std::vector<Vec> vs;
    vs.reserve(fs.size());
    for (const auto& f : fs) vs.push_back(f.values);
    return linear_rank(vs);
}

} // namespace semieq
