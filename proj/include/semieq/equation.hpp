#pragma once

// Residual computation for the four functional equations the library treats.

#include "semieq/func.hpp"
#include "semieq/spaces.hpp"

namespace semieq {

struct ResidualStatus {
    bool zero = true;      // exact over finite fields, within tol over complex
    double max_abs = 0.0;  // max |LHS - RHS| over all pairs (complex); 0/1 finite
    int wx = -1, wy = -1;  // worst pair

    void account(const Scalar& lhs, const Scalar& rhs, int x, int y) {
        if (lhs == rhs) return;
        zero = false;
        double mag = abs_value(lhs - rhs);
        if (mag >= max_abs) {
            max_abs = mag;
            wx = x;
            wy = y;
        }
    }
};

struct SolutionTriple {
    Func f, g, h;

    bool same_shape() const {
        return f.size() == g.size() && g.size() == h.size() && *f.field == *g.field &&
               *g.field == *h.field;
    }
};

// f(x sigma(y)) = f(x)g(y) + g(x)f(y) + h(x)h(y)
inline ResidualStatus residual_main(const Semigroup& s, const Involution& sigma, const Func& f,
                                    const Func& g, const Func& h) {
    if (f.size() != g.size() || g.size() != h.size() || *f.field != *g.field ||
        *g.field != *h.field || f.size() != static_cast<size_t>(s.order()))
        throw FieldError("dimension or field mismatch in residual_main");
    ResidualStatus r;
    for (int x = 0; x < s.order(); ++x)
        for (int y = 0; y < s.order(); ++y)
            r.account(f[s.op(x, sigma(y))], f[x] * g[y] + g[x] * f[y] + h[x] * h[y], x, y);
    return r;
}

inline ResidualStatus residual_main(const Semigroup& s, const Involution& sigma,
                                    const SolutionTriple& t) {
    return residual_main(s, sigma, t.f, t.g, t.h);
}

// phi(xy) = phi(x)chi(y) + chi(x)phi(y)
inline ResidualStatus residual_sine(const Semigroup& s, const Func& phi, const Func& chi) {
    ResidualStatus r;
    for (int x = 0; x < s.order(); ++x)
        for (int y = 0; y < s.order(); ++y)
            r.account(phi[s.op(x, y)], phi[x] * chi[y] + chi[x] * phi[y], x, y);
    return r;
}

// f(xy) = f(x)chi(y) + chi(x)f(y) + phi(x)phi(y)
inline ResidualStatus residual_special_cs(const Semigroup& s, const Func& f, const Func& chi,
                                          const Func& phi) {
    ResidualStatus r;
    for (int x = 0; x < s.order(); ++x)
        for (int y = 0; y < s.order(); ++y)
            r.account(f[s.op(x, y)], f[x] * chi[y] + chi[x] * f[y] + phi[x] * phi[y], x, y);
    return r;
}

// psi(x sigma(y)) = psi(x)chi(y) + chi(x)psi(y) + phi(x)phi(y)
inline ResidualStatus residual_cs_type(const Semigroup& s, const Involution& sigma, const Func& psi,
                                       const Func& chi, const Func& phi) {
    ResidualStatus r;
    for (int x = 0; x < s.order(); ++x)
        for (int y = 0; y < s.order(); ++y)
            r.account(psi[s.op(x, sigma(y))], psi[x] * chi[y] + chi[x] * psi[y] + phi[x] * phi[y],
                      x, y);
    return r;
}

} // namespace semieq
