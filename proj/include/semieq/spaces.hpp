#pragma once

// Linear solvers for the building-block function spaces: the sine addition
// law relative to a multiplicative chi, and its cosine-sine extension.

#include "semieq/func.hpp"

#include <optional>

namespace semieq {

// Symmetry side constraints used when sampling building blocks.
enum class Symmetry { None, Even, Odd };

inline void add_symmetry_rows(LinearSystem& sys, const Involution& sigma, Symmetry sym) {
    if (sym == Symmetry::None) return;
    const Field& f = sys.field();
    int n = static_cast<int>(sys.cols());
    for (int x = 0; x < n; ++x) {
        Vec row = sys.zero_row();
        row[static_cast<size_t>(x)] = row[static_cast<size_t>(x)] + f.one();
        Scalar sgn = sym == Symmetry::Even ? -f.one() : f.one();
        row[static_cast<size_t>(sigma(x))] = row[static_cast<size_t>(sigma(x))] + sgn;
        sys.add_row(std::move(row), f.zero());
    }
}

// Basis of { phi : phi(xy) = phi(x)chi(y) + chi(x)phi(y) }, the nullspace of
// the n^2 x n system over the pair index.
inline std::vector<Func> chi_additive_basis(const Semigroup& s, const Func& chi,
                                            const Involution* sigma = nullptr,
                                            Symmetry sym = Symmetry::None) {
    const Field& f = *chi.field;
    int n = s.order();
    LinearSystem sys(f, static_cast<size_t>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            Vec row = sys.zero_row();
            int xy = s.op(x, y);
            row[static_cast<size_t>(xy)] = row[static_cast<size_t>(xy)] + f.one();
            row[static_cast<size_t>(x)] = row[static_cast<size_t>(x)] - chi[y];
            row[static_cast<size_t>(y)] = row[static_cast<size_t>(y)] - chi[x];
            sys.add_row(std::move(row), f.zero());
        }
    if (sigma) add_symmetry_rows(sys, *sigma, sym);
    std::vector<Func> out;
    for (auto& v : sys.nullspace()) out.emplace_back(f, std::move(v));
    return out;
}

inline bool is_chi_additive(const Semigroup& s, const Func& phi, const Func& chi,
                            int* wx = nullptr, int* wy = nullptr) {
    for (int x = 0; x < s.order(); ++x)
        for (int y = 0; y < s.order(); ++y)
            if (phi[s.op(x, y)] != phi[x] * chi[y] + chi[x] * phi[y]) {
                if (wx) *wx = x;
                if (wy) *wy = y;
                return false;
            }
    return true;
}

struct AffineFuncSet {
    bool consistent = false;
    Func particular;
    std::vector<Func> basis;

    bool trivial() const { return consistent && basis.empty(); }

    // Number of points over a finite field, as a double to avoid overflow.
    double count(const Field& f) const {
        if (!consistent) return 0;
        double c = 1;
        for (size_t i = 0; i < basis.size(); ++i) c *= static_cast<double>(f.size());
        return c;
    }
};

// All psi with psi(x sigma(y)) = psi(x)chi(y) + chi(x)psi(y) + phi(x)phi(y);
// phi must be chi-additive. Optional symmetry constraint on psi, taken
// relative to sym_sigma when given (the equation may use the identity while
// parity refers to the actual involution).
inline AffineFuncSet cosine_sine_type_solutions(const Semigroup& s, const Involution& sigma,
                                                const Func& chi, const Func& phi,
                                                Symmetry psi_sym = Symmetry::None,
                                                const Involution* sym_sigma = nullptr) {
    int wx = 0, wy = 0;
    if (!is_chi_additive(s, phi, chi, &wx, &wy))
        throw FieldError("phi is not chi-additive (witness pair " + std::to_string(wx) + "," +
                         std::to_string(wy) + ")");
    const Field& f = *chi.field;
    int n = s.order();
    LinearSystem sys(f, static_cast<size_t>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            Vec row = sys.zero_row();
            int xsy = s.op(x, sigma(y));
            row[static_cast<size_t>(xsy)] = row[static_cast<size_t>(xsy)] + f.one();
            row[static_cast<size_t>(x)] = row[static_cast<size_t>(x)] - chi[y];
            row[static_cast<size_t>(y)] = row[static_cast<size_t>(y)] - chi[x];
            sys.add_row(std::move(row), phi[x] * phi[y]);
        }
    add_symmetry_rows(sys, sym_sigma ? *sym_sigma : sigma, psi_sym);
    auto sol = sys.solve();
    AffineFuncSet out;
    out.consistent = sol.consistent;
    if (sol.consistent) {
        out.particular = Func(f, std::move(sol.particular));
        for (auto& v : sol.basis) out.basis.emplace_back(f, std::move(v));
    }
    return out;
}

// Basis of functions vanishing on a subset (e.g. 0-additive = zero on S^2),
// with an optional parity constraint.
inline std::vector<Func> vanishing_basis(const Semigroup& s, const Field& f,
                                         const std::vector<int>& subset, const Involution& sigma,
                                         Symmetry sym) {
    int n = s.order();
    LinearSystem sys(f, static_cast<size_t>(n));
    for (int i : subset) {
        Vec row = sys.zero_row();
        row[static_cast<size_t>(i)] = f.one();
        sys.add_row(std::move(row), f.zero());
    }
    add_symmetry_rows(sys, sigma, sym);
    std::vector<Func> out;
    for (auto& v : sys.nullspace()) out.emplace_back(f, std::move(v));
    return out;
}

} // namespace semieq
