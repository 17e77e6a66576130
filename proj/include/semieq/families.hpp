#pragma once

// The catalog of closed-form solution families: parameterized constructors
// with full constraint validation, and randomized samplers that draw valid
// parameter sets from the building-block spaces on a given (S, sigma, K).

#include "semieq/equation.hpp"
#include "semieq/lemmas.hpp"

#include <map>
#include <random>

namespace semieq {

enum class FamilyId {
    DepZeroA, // f = 0: g free, h = 0
    DepZeroB, // f nonzero but vanishing on S^2: one-parameter multiples
    DepAi,    // even multiplicative core, fixed multiplicative part
    DepAii,   // even multiplicative core, moving multiplicative part
    DepB,     // difference of two even multiplicative functions
    DepC,     // sine-law core with even derivation
    DepD,     // cosine-sine core with odd derivation
    DepE,     // three-character mix with one moving character
    DepF,     // rank-one square core with odd root
    IndepA,   // plain cosine-sine triple, all even
    IndepB,   // two characters and a derivation, g multiplicative
    IndepC,   // two characters and a derivation, g an average
    IndepD,   // three-character mix
    IndepE,   // shear conjugate of IndepA..IndepD
    IndepF,   // rank-one square core, f and h independent
    IndepG,   // character plus vanishing part, sheared
    IndepH,   // character plus vanishing part, averaged
};

inline const std::vector<FamilyId>& all_families() {
    static const std::vector<FamilyId> v = {
        FamilyId::DepZeroA, FamilyId::DepZeroB, FamilyId::DepAi, FamilyId::DepAii,
        FamilyId::DepB,     FamilyId::DepC,     FamilyId::DepD,  FamilyId::DepE,
        FamilyId::DepF,     FamilyId::IndepA,   FamilyId::IndepB, FamilyId::IndepC,
        FamilyId::IndepD,   FamilyId::IndepE,   FamilyId::IndepF, FamilyId::IndepG,
        FamilyId::IndepH};
    return v;
}

inline std::string family_name(FamilyId id) {
    switch (id) {
    case FamilyId::DepZeroA: return "dep-zero-a";
    case FamilyId::DepZeroB: return "dep-zero-b";
    case FamilyId::DepAi: return "dep-a-i";
    case FamilyId::DepAii: return "dep-a-ii";
    case FamilyId::DepB: return "dep-b";
    case FamilyId::DepC: return "dep-c";
    case FamilyId::DepD: return "dep-d";
    case FamilyId::DepE: return "dep-e";
    case FamilyId::DepF: return "dep-f";
    case FamilyId::IndepA: return "indep-a";
    case FamilyId::IndepB: return "indep-b";
    case FamilyId::IndepC: return "indep-c";
    case FamilyId::IndepD: return "indep-d";
    case FamilyId::IndepE: return "indep-e";
    case FamilyId::IndepF: return "indep-f";
    case FamilyId::IndepG: return "indep-g";
    case FamilyId::IndepH: return "indep-h";
    }
    return "?";
}

inline FamilyId family_from_name(const std::string& name) {
    for (FamilyId id : all_families())
        if (family_name(id) == name) return id;
    throw FieldError("unknown family name '" + name + "'");
}

struct ParamSet {
    std::map<std::string, Scalar> scalars;
    std::map<std::string, Func> funcs;

    const Scalar& scalar(const std::string& k) const {
        auto it = scalars.find(k);
        if (it == scalars.end()) throw FieldError("missing scalar parameter '" + k + "'");
        return it->second;
    }
    const Func& func(const std::string& k) const {
        auto it = funcs.find(k);
        if (it == funcs.end()) throw FieldError("missing function parameter '" + k + "'");
        return it->second;
    }
    bool has_func(const std::string& k) const { return funcs.count(k) != 0; }
};

namespace detail {

inline void require(bool cond, const std::string& what) {
    if (!cond) throw FieldError("parameter constraint violated: " + what);
}

inline Scalar half_of(const Field& f) { return f.from_int(2).inv(); }

inline void require_even_mult(const Semigroup& s, const Involution& sigma, const Func& m,
                              const std::string& name) {
    require(is_multiplicative(s, m), name + " multiplicative");
    require(is_even(m, sigma), name + " even");
}

} // namespace detail

// Checks the stated constraints of a family's parameter set; throws on the
// first violated constraint. Does not check that the assembled triple solves
// the equation -- construct() verifies that as a final safety net.
inline void validate_params(FamilyId id, const Semigroup& s, const Involution& sigma,
                            const ParamSet& ps) {
    using detail::require;
    using detail::require_even_mult;
    const Field* fld = nullptr;
    if (!ps.scalars.empty()) fld = ps.scalars.begin()->second.field;
    if (!ps.funcs.empty()) fld = ps.funcs.begin()->second.field;
    require(fld != nullptr, "parameter set is empty");
    const Field& f = *fld;
    auto sq = square_set(s);
    Scalar two = f.from_int(2);

    auto require_vanishing = [&](const Func& k, Symmetry sym, const std::string& name) {
        require(k.zero_on(sq), name + " vanishing on products");
        if (sym == Symmetry::Even) require(is_even(k, sigma), name + " even");
        if (sym == Symmetry::Odd) require(is_odd(k, sigma), name + " odd");
    };

    switch (id) {
    case FamilyId::DepZeroA:
        // g arbitrary: nothing to check beyond presence
        (void)ps.func("g");
        break;
    case FamilyId::DepZeroB: {
        const Func& ff = ps.func("f");
        require(!ff.is_zero(), "f nonzero");
        require(ff.zero_on(sq), "f vanishing on products");
        (void)ps.scalar("lambda");
        break;
    }
    case FamilyId::DepAi: {
        const Func& m = ps.func("m");
        require_even_mult(s, sigma, m, "m");
        require(!m.is_zero(), "m nonzero");
        Scalar lambda = ps.scalar("lambda"), mu = ps.scalar("mu"), eta = ps.scalar("eta");
        Scalar D = lambda * lambda - two * mu;
        require(!D.is_zero(), "lambda^2 - 2 mu nonzero");
        bool branch1 = !eta.is_zero() && (eta * eta - two * lambda * eta + two * mu).is_zero();
        bool branch2 = eta.is_zero() && mu.is_zero() && !lambda.is_zero();
        require(branch1 || branch2, "eta/mu/lambda branch condition");
        require_vanishing(ps.func("k"), Symmetry::Odd, "k");
        break;
    }
    case FamilyId::DepAii: {
        const Func& m = ps.func("m");
        require(is_multiplicative(s, m), "m multiplicative");
        require(m != m.compose(sigma), "m distinct from its sigma-conjugate");
        Scalar lambda = ps.scalar("lambda"), mu = ps.scalar("mu"), rho = ps.scalar("rho");
        Scalar D = lambda * lambda - two * mu;
        require(!D.is_zero(), "lambda^2 - 2 mu nonzero");
        require(!rho.is_zero(), "rho nonzero");
        require((f.from_int(4) * D * rho * rho + f.one()).is_zero(), "rho^2 = -1/(4 D)");
        break;
    }
    case FamilyId::DepB: {
        const Func& c1 = ps.func("chi1");
        const Func& c2 = ps.func("chi2");
        require_even_mult(s, sigma, c1, "chi1");
        require_even_mult(s, sigma, c2, "chi2");
        require(c1 != c2, "chi1 distinct from chi2");
        require(!ps.scalar("c").is_zero(), "c nonzero");
        (void)ps.scalar("lambda");
        break;
    }
    case FamilyId::DepC: {
        const Func& chi = ps.func("chi");
        const Func& phi = ps.func("phi");
        require_even_mult(s, sigma, chi, "chi");
        require(!chi.is_zero(), "chi nonzero");
        require(is_chi_additive(s, phi, chi), "phi chi-additive");
        require(is_even(phi, sigma), "phi even");
        require(!phi.is_zero(), "phi nonzero");
        (void)ps.scalar("lambda");
        break;
    }
    case FamilyId::DepD: {
        const Func& chi = ps.func("chi");
        const Func& phi = ps.func("phi");
        const Func& psi = ps.func("psi");
        require_even_mult(s, sigma, chi, "chi");
        require(is_chi_additive(s, phi, chi), "phi chi-additive");
        require(is_odd(phi, sigma), "phi odd");
        require(!phi.is_zero(), "phi nonzero");
        require(is_even(psi, sigma), "psi even");
        require(residual_special_cs(s, psi, chi, phi).zero, "psi of cosine-sine type for (chi, phi)");
        Scalar i = ps.scalar("i");
        require((i * i + f.one()).is_zero(), "i^2 = -1");
        (void)ps.scalar("lambda");
        break;
    }
    case FamilyId::DepE: {
        const Func& c1 = ps.func("chi1");
        const Func& chi = ps.func("chi");
        require(is_multiplicative(s, c1), "chi1 multiplicative");
        require(c1 != c1.compose(sigma), "chi1 distinct from its sigma-conjugate");
        require_even_mult(s, sigma, chi, "chi");
        require(chi != c1, "chi distinct from chi1");
        require(!ps.scalar("c").is_zero(), "c nonzero");
        (void)ps.scalar("lambda");
        break;
    }
    case FamilyId::DepF: {
        const Func& phi = ps.func("phi");
        const Func& psi = ps.func("psi");
        require_vanishing(phi, Symmetry::Odd, "phi");
        require(!phi.is_zero(), "phi nonzero");
        require(is_even(psi, sigma), "psi even");
        require(residual_special_cs(s, psi, Func::zero(f, s.order()), phi).zero,
                "psi(xy) = phi(x)phi(y)");
        require_vanishing(ps.func("k"), Symmetry::Odd, "k");
        Scalar i = ps.scalar("i");
        require((i * i + f.one()).is_zero(), "i^2 = -1");
        (void)ps.scalar("lambda");
        break;
    }
    case FamilyId::IndepA: {
        const Func& chi = ps.func("chi");
        const Func& phi = ps.func("phi");
        const Func& psi = ps.func("psi");
        require_even_mult(s, sigma, chi, "chi");
        require(!chi.is_zero(), "chi nonzero");
        require(is_chi_additive(s, phi, chi), "phi chi-additive");
        require(is_even(phi, sigma), "phi even");
        require(!phi.is_zero(), "phi nonzero");
        require(is_even(psi, sigma), "psi even");
        require(!psi.is_zero(), "psi nonzero");
        require(residual_special_cs(s, psi, chi, phi).zero, "psi of cosine-sine type for (chi, phi)");
        break;
    }
    case FamilyId::IndepB: {
        const Func& m = ps.func("m");
        const Func& chi = ps.func("chi");
        const Func& phi = ps.func("phi");
        require_even_mult(s, sigma, m, "m");
        require_even_mult(s, sigma, chi, "chi");
        require(is_chi_additive(s, phi, chi), "phi chi-additive");
        require(is_even(phi, sigma), "phi even");
        require(!ps.scalar("c").is_zero(), "c nonzero");
        break;
    }
    case FamilyId::IndepC: {
        const Func& m = ps.func("m");
        const Func& chi = ps.func("chi");
        const Func& phi = ps.func("phi");
        require_even_mult(s, sigma, m, "m");
        require_even_mult(s, sigma, chi, "chi");
        require(is_chi_additive(s, phi, chi), "phi chi-additive");
        require(is_even(phi, sigma), "phi even");
        Scalar a = ps.scalar("a"), b = ps.scalar("b");
        require(!a.is_zero(), "a nonzero");
        require(!b.is_zero(), "b nonzero");
        require((f.one() + a * b * b).is_zero(), "1 + a b^2 = 0");
        break;
    }
    case FamilyId::IndepD: {
        const Func& c1 = ps.func("chi1");
        const Func& c2 = ps.func("chi2");
        const Func& c3 = ps.func("chi3");
        // The zero multiplicative function is admitted; distinctness is the
        // real constraint.
        for (const auto* c : {&c1, &c2, &c3}) require_even_mult(s, sigma, *c, "chi_i");
        require(c1 != c2 && c1 != c3 && c2 != c3, "chi1, chi2, chi3 distinct");
        Scalar alpha = ps.scalar("alpha"), rho = ps.scalar("rho"), lambda = ps.scalar("lambda");
        require(!lambda.is_zero(), "lambda nonzero");
        require((two * alpha * lambda * lambda * rho * (two - rho) - f.one()).is_zero(),
                "2 alpha lambda^2 rho (2 - rho) = 1");
        break;
    }
    case FamilyId::IndepE: {
        SolutionTriple base{ps.func("f0"), ps.func("g0"), ps.func("h0")};
        require(residual_main(s, sigma, base).zero, "base triple solves the equation");
        (void)ps.scalar("delta");
        break;
    }
    case FamilyId::IndepF: {
        const Func& Phi0 = ps.func("Phi0");
        const Func& Psi0 = ps.func("Psi0");
        require_vanishing(Phi0, Symmetry::Even, "Phi0");
        require(!Phi0.is_zero(), "Phi0 nonzero");
        require(is_even(Psi0, sigma), "Psi0 even");
        require(!Psi0.is_zero(), "Psi0 nonzero");
        require(residual_cs_type(s, sigma, Psi0, Func::zero(f, s.order()), Phi0).zero,
                "Psi0(x sigma(y)) = Phi0(x)Phi0(y)");
        require_vanishing(ps.func("k"), Symmetry::Odd, "k");
        (void)ps.scalar("beta");
        break;
    }
    case FamilyId::IndepG: {
        const Func& m = ps.func("m");
        require_even_mult(s, sigma, m, "m");
        require(!m.is_zero(), "m nonzero");
        require_vanishing(ps.func("Phi0"), Symmetry::Even, "Phi0");
        require_vanishing(ps.func("k"), Symmetry::Odd, "k");
        require(!ps.scalar("c").is_zero(), "c nonzero");
        (void)ps.scalar("beta");
        break;
    }
    case FamilyId::IndepH: {
        const Func& m = ps.func("m");
        require_even_mult(s, sigma, m, "m");
        require(!m.is_zero(), "m nonzero");
        require_vanishing(ps.func("Phi0"), Symmetry::Even, "Phi0");
        require_vanishing(ps.func("k"), Symmetry::Odd, "k");
        Scalar a = ps.scalar("a"), b = ps.scalar("b");
        require(!b.is_zero(), "b nonzero");
        require((f.one() + a * b * b).is_zero(), "1 + a b^2 = 0");
        break;
    }
    }
}

// Builds the closed-form triple from validated parameters and verifies the
// residual before returning; `note` receives any construction-time
// disambiguation. Throws when the assembled triple fails to solve.
inline SolutionTriple construct(FamilyId id, const Semigroup& s, const Involution& sigma,
                                const ParamSet& ps, std::string* note = nullptr) {
    validate_params(id, s, sigma, ps);
    const Field* fld = ps.scalars.empty() ? ps.funcs.begin()->second.field
                                          : ps.scalars.begin()->second.field;
    const Field& f = *fld;
    int n = s.order();
    Scalar two = f.from_int(2);
    Scalar half = detail::half_of(f);
    SolutionTriple t;

    switch (id) {
    case FamilyId::DepZeroA:
        t.f = Func::zero(f, n);
        t.g = ps.func("g");
        t.h = Func::zero(f, n);
        break;
    case FamilyId::DepZeroB: {
        Scalar lambda = ps.scalar("lambda");
        t.f = ps.func("f");
        t.g = (-(half * lambda * lambda)) * t.f;
        t.h = lambda * t.f;
        break;
    }
    case FamilyId::DepAi:
    case FamilyId::DepAii: {
        Scalar lambda = ps.scalar("lambda"), mu = ps.scalar("mu");
        Scalar D = lambda * lambda - two * mu;
        Func m = ps.func("m");
        Func ms = m.compose(sigma);
        Func A = (half / D) * (m + ms); // (m + m*) / (2D)
        Func B = m - ms;
        Scalar rho = id == FamilyId::DepAii ? ps.scalar("rho") : f.zero();
        Func k = id == FamilyId::DepAi ? ps.func("k") : Func::zero(f, n);
        Scalar eta = id == FamilyId::DepAi ? ps.scalar("eta") : f.zero();
        t.f = A + k;
        t.g = (-mu) * A + (lambda * rho) * B + (-(half * eta * eta)) * k;
        // Two published variants for the even part of h differ by a factor of
        // two; keep whichever leaves a zero residual.
        Func h_resolved = lambda * A + (-rho) * B + eta * k;
        Func h_alt = (two * lambda) * A + (-rho) * B + eta * k;
        t.h = h_resolved;
        if (residual_main(s, sigma, t).zero) {
            if (note) *note = "even h-coefficient lambda/(2D)";
        } else {
            t.h = h_alt;
            if (note) *note = "even h-coefficient lambda/D";
        }
        break;
    }
    case FamilyId::DepB: {
        Scalar lambda = ps.scalar("lambda"), c = ps.scalar("c");
        Func u = ps.func("chi1") - ps.func("chi2");
        Scalar inv2c = (two * c).inv();
        t.f = inv2c * u;
        Scalar q = (f.from_int(4) * c).inv();
        t.g = (q * (two * c - lambda * lambda)) * ps.func("chi1") +
              (q * (two * c + lambda * lambda)) * ps.func("chi2");
        t.h = (lambda * inv2c) * u;
        break;
    }
    case FamilyId::DepC: {
        Scalar lambda = ps.scalar("lambda");
        t.f = ps.func("phi");
        t.g = ps.func("chi") + (-(half * lambda * lambda)) * t.f;
        t.h = lambda * t.f;
        break;
    }
    case FamilyId::DepD: {
        Scalar lambda = ps.scalar("lambda"), i = ps.scalar("i");
        const Func& psi = ps.func("psi");
        const Func& phi = ps.func("phi");
        t.f = psi;
        t.g = (-(half * lambda * lambda)) * psi + ps.func("chi") + (i * lambda) * phi;
        t.h = lambda * psi + (-i) * phi;
        break;
    }
    case FamilyId::DepE: {
        Scalar lambda = ps.scalar("lambda"), c = ps.scalar("c");
        Func A = ps.func("chi1") + ps.func("chi1").compose(sigma);
        Func B = ps.func("chi1") - ps.func("chi1").compose(sigma);
        const Func& chi = ps.func("chi");
        Scalar c2 = c * c;
        Scalar l2c2 = lambda * lambda * c2;
        t.f = (-(two * c2)) * A + (f.from_int(4) * c2) * chi;
        t.g = ((f.one() + f.from_int(4) * l2c2) * f.from_int(4).inv()) * A +
              ((f.one() - f.from_int(4) * l2c2) * half) * chi + (-(lambda * c)) * B;
        t.h = (-(two * lambda * c2)) * A + (f.from_int(4) * lambda * c2) * chi + c * B;
        break;
    }
    case FamilyId::DepF: {
        Scalar lambda = ps.scalar("lambda"), i = ps.scalar("i");
        Func F = ps.func("psi") + ps.func("k");
        const Func& phi = ps.func("phi");
        t.f = F;
        t.g = (-(half * lambda * lambda)) * F + (-(lambda * i)) * phi;
        t.h = lambda * F + i * phi;
        break;
    }
    case FamilyId::IndepA:
        t.f = ps.func("psi");
        t.g = ps.func("chi");
        t.h = ps.func("phi");
        break;
    case FamilyId::IndepB: {
        Scalar c = ps.scalar("c");
        const Func& m = ps.func("m");
        const Func& chi = ps.func("chi");
        t.f = (c * c) * m + (-(c * c)) * chi + (-c) * ps.func("phi");
        t.g = chi;
        t.h = c * m + (-c) * chi;
        break;
    }
    case FamilyId::IndepC: {
        Scalar a = ps.scalar("a"), b = ps.scalar("b");
        const Func& m = ps.func("m");
        const Func& chi = ps.func("chi");
        const Func& phi = ps.func("phi");
        t.f = (-a) * m + a * chi + (-(a * b)) * phi;
        t.g = half * m + half * chi + (-(half * b)) * phi;
        t.h = phi;
        break;
    }
    case FamilyId::IndepD: {
        Scalar alpha = ps.scalar("alpha"), rho = ps.scalar("rho"), lambda = ps.scalar("lambda");
        const Func& c1 = ps.func("chi1");
        const Func& c2 = ps.func("chi2");
        const Func& c3 = ps.func("chi3");
        Scalar q = f.from_int(4).inv();
        t.f = (alpha * rho) * c1 + (alpha * (two - rho)) * c2 + (-(two * alpha)) * c3;
        t.g = (q * rho) * c1 + (q * (two - rho)) * c2 + half * c3;
        t.h = ((two * lambda).inv()) * (c1 - c2);
        break;
    }
    case FamilyId::IndepE: {
        Scalar delta = ps.scalar("delta");
        const Func& f0 = ps.func("f0");
        const Func& g0 = ps.func("g0");
        const Func& h0 = ps.func("h0");
        t.f = f0;
        t.g = (-(half * delta * delta)) * f0 + g0 + delta * h0;
        t.h = (-delta) * f0 + h0;
        break;
    }
    case FamilyId::IndepF: {
        Scalar beta = ps.scalar("beta");
        Func F = ps.func("Psi0") + ps.func("k");
        const Func& Phi0 = ps.func("Phi0");
        t.f = F;
        t.g = (-(half * beta * beta)) * F + beta * Phi0;
        t.h = (-beta) * F + Phi0;
        break;
    }
    case FamilyId::IndepG: {
        Scalar c = ps.scalar("c"), beta = ps.scalar("beta");
        const Func& m = ps.func("m");
        const Func& Phi0 = ps.func("Phi0");
        const Func& k = ps.func("k");
        t.f = (c * c) * m + (-c) * Phi0 + k;
        t.g = (half * c * beta * (two - c * beta)) * m + (half * c * beta * beta) * Phi0 +
              (-(half * beta * beta)) * k;
        t.h = (c * (f.one() - c * beta)) * m + (c * beta) * Phi0 + (-beta) * k;
        break;
    }
    case FamilyId::IndepH: {
        Scalar a = ps.scalar("a"), b = ps.scalar("b");
        const Func& m = ps.func("m");
        const Func& Phi0 = ps.func("Phi0");
        const Func& k = ps.func("k");
        t.f = (-a) * m + (-(a * b)) * Phi0 + k;
        t.g = half * m + (-(half * b)) * Phi0 + (-(half * b * b)) * k;
        t.h = Phi0 + b * k;
        break;
    }
    }

    auto res = residual_main(s, sigma, t);
    if (!res.zero)
        throw FieldError("constructed " + family_name(id) +
                         " triple fails the equation (worst pair " + std::to_string(res.wx) + "," +
                         std::to_string(res.wy) + ")");
    return t;
}

// ---------------------------------------------------------------------------
// Building-block cache and randomized sampling.

struct SpaceCache {
    const Semigroup* s = nullptr;
    const Involution* sigma = nullptr;
    const Field* field = nullptr;
    std::vector<int> squares;
    std::vector<Func> mult;              // all multiplicative functions, zero included
    std::vector<Func> even_mult;         // sigma-even ones
    std::vector<Func> moving_mult;       // m with m != m∘σ
    std::vector<Func> vanish_even;       // basis: zero on S^2, even
    std::vector<Func> vanish_odd;        // basis: zero on S^2, odd
    std::optional<Scalar> i_unit;        // a square root of -1 when one exists

    SpaceCache(const Semigroup& sg, const Involution& inv, const Field& f)
        : s(&sg), sigma(&inv), field(&f) {
        squares = square_set(sg);
        mult = multiplicative_functions(sg, f);
        for (const auto& m : mult) {
            if (is_even(m, inv)) even_mult.push_back(m);
            else if (m != m.compose(inv)) moving_mult.push_back(m);
        }
        vanish_even = vanishing_basis(sg, f, squares, inv, Symmetry::Even);
        vanish_odd = vanishing_basis(sg, f, squares, inv, Symmetry::Odd);
        auto roots = sqrt_all(-f.one());
        if (!roots.empty()) i_unit = roots.front();
    }
};

inline Scalar random_scalar(const Field& f, std::mt19937_64& rng, bool nonzero = false) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        Scalar v;
        if (f.finite()) {
            std::uniform_int_distribution<size_t> d(0, f.size() - 1);
            v = f.element(d(rng));
        } else {
            // Small half-integer grid keeps rounding noise far below tolerance.
            std::uniform_int_distribution<int> d(-6, 6);
            v = Scalar::complex_value(f, {d(rng) / 2.0, d(rng) / 2.0});
        }
        if (!nonzero || !v.is_zero()) return v;
    }
    return f.one();
}

inline Func random_combination(const Field& f, int n, const std::vector<Func>& basis,
                               std::mt19937_64& rng) {
    Func out = Func::zero(f, n);
    for (const auto& b : basis) out = out + random_scalar(f, rng) * b;
    return out;
}

template <typename T>
const T& random_choice(const std::vector<T>& v, std::mt19937_64& rng) {
    std::uniform_int_distribution<size_t> d(0, v.size() - 1);
    return v[d(rng)];
}

struct FamilySample {
    ParamSet params;
    SolutionTriple triple;
    std::string note;
};

struct RealizabilityNote {
    FamilyId id;
    bool realizable = false;
    std::string reason; // why no sample exists, when not realizable
};

// Draws up to `want` valid parameter sets for one family on (S, sigma, K).
// Returns fewer (possibly none) when the required building blocks do not
// exist; `why_empty` then explains the first obstruction met.
inline std::vector<FamilySample> sample_family(FamilyId id, const Semigroup& s,
                                               const Involution& sigma, const SpaceCache& cache,
                                               std::mt19937_64& rng, int want,
                                               std::string* why_empty = nullptr) {
    const Field& f = *cache.field;
    int n = s.order();
    Scalar two = f.from_int(2);
    Scalar half = detail::half_of(f);
    std::vector<FamilySample> out;
    std::string obstruction;
    auto blocked = [&](const std::string& why) {
        obstruction = why;
        return false;
    };

    // One attempt: fill ps and return true, or report the obstruction.
    auto attempt = [&](ParamSet& ps) -> bool {
        switch (id) {
        case FamilyId::DepZeroA: {
            Func g = Func::zero(f, n);
            for (int x = 0; x < n; ++x) g[x] = random_scalar(f, rng);
            ps.funcs["g"] = g;
            return true;
        }
        case FamilyId::DepZeroB: {
            Func ff = random_combination(f, n, cache.vanish_even, rng) +
                      random_combination(f, n, cache.vanish_odd, rng);
            if (ff.is_zero()) {
                if (cache.vanish_even.empty() && cache.vanish_odd.empty())
                    return blocked("no nonzero function vanishing on products");
                return false;
            }
            ps.funcs["f"] = ff;
            ps.scalars.emplace("lambda", random_scalar(f, rng));
            return true;
        }
        case FamilyId::DepAi: {
            std::vector<Func> ms;
            for (const auto& m : cache.even_mult)
                if (!m.is_zero()) ms.push_back(m);
            if (ms.empty()) return blocked("no nonzero even multiplicative function");
            ps.funcs["m"] = random_choice(ms, rng);
            std::uniform_int_distribution<int> pick(0, 1);
            Scalar lambda, mu, eta;
            if (pick(rng) == 0) {
                // eta = mu = 0 branch
                lambda = random_scalar(f, rng, true);
                mu = f.zero();
                eta = f.zero();
            } else {
                eta = random_scalar(f, rng, true);
                lambda = random_scalar(f, rng);
                if (lambda == eta) return false; // would give D = 0
                mu = eta * lambda - half * eta * eta;
            }
            ps.scalars.emplace("lambda", lambda);
            ps.scalars.emplace("mu", mu);
            ps.scalars.emplace("eta", eta);
            ps.funcs["k"] = random_combination(f, n, cache.vanish_odd, rng);
            return true;
        }
        case FamilyId::DepAii: {
            if (cache.moving_mult.empty())
                return blocked("no multiplicative function moved by sigma");
            ps.funcs["m"] = random_choice(cache.moving_mult, rng);
            Scalar lambda = random_scalar(f, rng);
            Scalar mu = random_scalar(f, rng);
            Scalar D = lambda * lambda - two * mu;
            if (D.is_zero()) return false;
            auto roots = sqrt_all(-(f.from_int(4) * D).inv());
            if (roots.empty()) return false; // -1/(4D) not a square this draw
            ps.scalars.emplace("lambda", lambda);
            ps.scalars.emplace("mu", mu);
            ps.scalars.emplace("rho", roots.front());
            return true;
        }
        case FamilyId::DepB: {
            std::vector<Func> ms;
            for (const auto& m : cache.even_mult)
                if (!m.is_zero()) ms.push_back(m);
            if (ms.size() < 2) return blocked("fewer than two even multiplicative functions");
            const Func& c1 = random_choice(ms, rng);
            const Func& c2 = random_choice(ms, rng);
            if (c1 == c2) return false;
            ps.funcs["chi1"] = c1;
            ps.funcs["chi2"] = c2;
            ps.scalars.emplace("c", random_scalar(f, rng, true));
            ps.scalars.emplace("lambda", random_scalar(f, rng));
            return true;
        }
        case FamilyId::DepC: {
            std::vector<std::pair<Func, std::vector<Func>>> pool;
            for (const auto& chi : cache.even_mult) {
                if (chi.is_zero()) continue;
                auto basis = chi_additive_basis(s, chi, &sigma, Symmetry::Even);
                if (!basis.empty()) pool.push_back({chi, std::move(basis)});
            }
            if (pool.empty())
                return blocked("no even multiplicative function with an even derivation");
            const auto& [chi, basis] = random_choice(pool, rng);
            Func phi = random_combination(f, n, basis, rng);
            if (phi.is_zero()) return false;
            ps.funcs["chi"] = chi;
            ps.funcs["phi"] = phi;
            ps.scalars.emplace("lambda", random_scalar(f, rng));
            return true;
        }
        case FamilyId::DepD: {
            if (!cache.i_unit) return blocked("no square root of -1 in the field");
            std::vector<std::pair<Func, std::vector<Func>>> pool;
            for (const auto& chi : cache.even_mult) {
                auto basis = chi_additive_basis(s, chi, &sigma, Symmetry::Odd);
                if (!basis.empty()) pool.push_back({chi, std::move(basis)});
            }
            if (pool.empty())
                return blocked("no even multiplicative function with an odd derivation");
            const auto& [chi, basis] = random_choice(pool, rng);
            Func phi = random_combination(f, n, basis, rng);
            if (phi.is_zero()) return false;
            Involution id_inv = identity_involution(s);
            auto psis = cosine_sine_type_solutions(s, id_inv, chi, phi, Symmetry::Even, &sigma);
            if (!psis.consistent) return false;
            ps.funcs["chi"] = chi;
            ps.funcs["phi"] = phi;
            ps.funcs["psi"] = psis.particular + random_combination(f, n, psis.basis, rng);
            ps.scalars.emplace("i", *cache.i_unit);
            ps.scalars.emplace("lambda", random_scalar(f, rng));
            return true;
        }
        case FamilyId::DepE: {
            if (cache.moving_mult.empty())
                return blocked("no multiplicative function moved by sigma");
            const Func& c1 = random_choice(cache.moving_mult, rng);
            std::vector<Func> chis;
            for (const auto& c : cache.even_mult)
                if (c != c1) chis.push_back(c);
            if (chis.empty()) return blocked("no even multiplicative companion");
            ps.funcs["chi1"] = c1;
            ps.funcs["chi"] = random_choice(chis, rng);
            ps.scalars.emplace("c", random_scalar(f, rng, true));
            ps.scalars.emplace("lambda", random_scalar(f, rng));
            return true;
        }
        case FamilyId::DepF: {
            if (!cache.i_unit) return blocked("no square root of -1 in the field");
            if (cache.vanish_odd.empty())
                return blocked("no odd function vanishing on products");
            Func phi = random_combination(f, n, cache.vanish_odd, rng);
            if (phi.is_zero()) return false;
            Involution id_inv = identity_involution(s);
            auto psis = cosine_sine_type_solutions(s, id_inv, Func::zero(f, n), phi,
                                                   Symmetry::Even, &sigma);
            if (!psis.consistent) return false;
            ps.funcs["phi"] = phi;
            ps.funcs["psi"] = psis.particular + random_combination(f, n, psis.basis, rng);
            ps.funcs["k"] = random_combination(f, n, cache.vanish_odd, rng);
            ps.scalars.emplace("i", *cache.i_unit);
            ps.scalars.emplace("lambda", random_scalar(f, rng));
            return true;
        }
        case FamilyId::IndepA: {
            std::vector<std::pair<Func, std::vector<Func>>> pool;
            for (const auto& chi : cache.even_mult) {
                if (chi.is_zero()) continue;
                auto basis = chi_additive_basis(s, chi, &sigma, Symmetry::Even);
                if (!basis.empty()) pool.push_back({chi, std::move(basis)});
            }
            if (pool.empty())
                return blocked("no even multiplicative function with an even derivation");
            const auto& [chi, basis] = random_choice(pool, rng);
            Func phi = random_combination(f, n, basis, rng);
            if (phi.is_zero()) return false;
            Involution id_inv = identity_involution(s);
            auto psis = cosine_sine_type_solutions(s, id_inv, chi, phi, Symmetry::Even, &sigma);
            if (!psis.consistent) return false;
            Func psi = psis.particular + random_combination(f, n, psis.basis, rng);
            if (psi.is_zero()) return false;
            ps.funcs["chi"] = chi;
            ps.funcs["phi"] = phi;
            ps.funcs["psi"] = psi;
            return true;
        }
        case FamilyId::IndepB:
        case FamilyId::IndepC: {
            std::vector<Func> ms;
            for (const auto& m : cache.even_mult) ms.push_back(m);
            if (ms.empty()) return blocked("no even multiplicative function");
            std::vector<std::pair<Func, std::vector<Func>>> pool;
            for (const auto& chi : cache.even_mult) {
                auto basis = chi_additive_basis(s, chi, &sigma, Symmetry::Even);
                pool.push_back({chi, std::move(basis)});
            }
            const auto& [chi, basis] = random_choice(pool, rng);
            ps.funcs["m"] = random_choice(ms, rng);
            ps.funcs["chi"] = chi;
            ps.funcs["phi"] = random_combination(f, n, basis, rng);
            if (id == FamilyId::IndepB) {
                ps.scalars.emplace("c", random_scalar(f, rng, true));
            } else {
                Scalar b = random_scalar(f, rng, true);
                ps.scalars.emplace("b", b);
                ps.scalars.emplace("a", -(b * b).inv());
            }
            return true;
        }
        case FamilyId::IndepD: {
            const std::vector<Func>& ms = cache.even_mult; // zero admitted
            if (ms.size() < 3) return blocked("fewer than three even multiplicative functions");
            const Func& c1 = random_choice(ms, rng);
            const Func& c2 = random_choice(ms, rng);
            const Func& c3 = random_choice(ms, rng);
            if (c1 == c2 || c1 == c3 || c2 == c3) return false;
            Scalar lambda = random_scalar(f, rng, true);
            Scalar rho = random_scalar(f, rng);
            if (rho.is_zero() || (two - rho).is_zero()) return false;
            Scalar alpha = (two * lambda * lambda * rho * (two - rho)).inv();
            ps.funcs["chi1"] = c1;
            ps.funcs["chi2"] = c2;
            ps.funcs["chi3"] = c3;
            ps.scalars.emplace("lambda", lambda);
            ps.scalars.emplace("rho", rho);
            ps.scalars.emplace("alpha", alpha);
            return true;
        }
        case FamilyId::IndepE: {
            static const std::vector<FamilyId> bases = {FamilyId::IndepA, FamilyId::IndepB,
                                                        FamilyId::IndepC, FamilyId::IndepD};
            // Start from a random base family but fall through to the others,
            // so one unrealizable (or unlucky) base does not kill the draw.
            std::uniform_int_distribution<size_t> start(0, bases.size() - 1);
            size_t first = start(rng);
            for (size_t off = 0; off < bases.size(); ++off) {
                FamilyId base_id = bases[(first + off) % bases.size()];
                std::string why;
                auto base = sample_family(base_id, s, sigma, cache, rng, 1, &why);
                if (base.empty()) continue;
                ps.funcs["f0"] = base.front().triple.f;
                ps.funcs["g0"] = base.front().triple.g;
                ps.funcs["h0"] = base.front().triple.h;
                ps.scalars.emplace("delta", random_scalar(f, rng, true));
                return true;
            }
            // Distinguish "all bases structurally blocked" from plain bad luck.
            for (FamilyId base_id : bases) {
                std::string why;
                if (!sample_family(base_id, s, sigma, cache, rng, 1, &why).empty()) return false;
            }
            return blocked("no base family realizable");
        }
        case FamilyId::IndepF: {
            if (cache.vanish_even.empty())
                return blocked("no even function vanishing on products");
            Func Phi0 = random_combination(f, n, cache.vanish_even, rng);
            if (Phi0.is_zero()) return false;
            auto psis = cosine_sine_type_solutions(s, sigma, Func::zero(f, n), Phi0,
                                                   Symmetry::Even);
            if (!psis.consistent) return false;
            Func Psi0 = psis.particular + random_combination(f, n, psis.basis, rng);
            if (Psi0.is_zero()) return false;
            ps.funcs["Phi0"] = Phi0;
            ps.funcs["Psi0"] = Psi0;
            ps.funcs["k"] = random_combination(f, n, cache.vanish_odd, rng);
            ps.scalars.emplace("beta", random_scalar(f, rng));
            return true;
        }
        case FamilyId::IndepG:
        case FamilyId::IndepH: {
            std::vector<Func> ms;
            for (const auto& m : cache.even_mult)
                if (!m.is_zero()) ms.push_back(m);
            if (ms.empty()) return blocked("no nonzero even multiplicative function");
            if (cache.vanish_even.empty())
                return blocked("no even function vanishing on products");
            Func Phi0 = random_combination(f, n, cache.vanish_even, rng);
            if (Phi0.is_zero()) return false;
            ps.funcs["m"] = random_choice(ms, rng);
            ps.funcs["Phi0"] = Phi0;
            ps.funcs["k"] = random_combination(f, n, cache.vanish_odd, rng);
            if (id == FamilyId::IndepG) {
                ps.scalars.emplace("c", random_scalar(f, rng, true));
                ps.scalars.emplace("beta", random_scalar(f, rng));
            } else {
                Scalar b = random_scalar(f, rng, true);
                ps.scalars.emplace("b", b);
                ps.scalars.emplace("a", -(b * b).inv());
            }
            return true;
        }
        }
        return false;
    };

    int max_attempts = want * 64 + 64;
    for (int a = 0; a < max_attempts && static_cast<int>(out.size()) < want; ++a) {
        ParamSet ps;
        if (!attempt(ps)) {
            if (!obstruction.empty()) break; // structural obstruction, not bad luck
            continue;
        }
        FamilySample smp;
        smp.params = std::move(ps);
        smp.triple = construct(id, s, sigma, smp.params, &smp.note);
        out.push_back(std::move(smp));
    }
    if (out.empty() && why_empty)
        *why_empty = obstruction.empty() ? "no valid draw within the attempt budget" : obstruction;
    return out;
}

inline std::vector<RealizabilityNote> realizability_survey(const Semigroup& s,
                                                           const Involution& sigma,
                                                           const SpaceCache& cache,
                                                           std::mt19937_64& rng) {
    std::vector<RealizabilityNote> notes;
    for (FamilyId id : all_families()) {
        RealizabilityNote note;
        note.id = id;
        std::string why;
        auto samples = sample_family(id, s, sigma, cache, rng, 1, &why);
        note.realizable = !samples.empty();
        if (!note.realizable) note.reason = why;
        notes.push_back(std::move(note));
    }
    return notes;
}

} // namespace semieq
