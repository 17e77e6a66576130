#pragma once

// Structure checkers for verified solutions of the main equation: the
// unconditional even/odd identities, the conditional collapse results keyed
// on the even parts of f and h, the character-span property of sine-law
// solutions, and the structural trichotomy for independent (f,h).

#include "semieq/equation.hpp"

#include <map>
#include <optional>
#include <sstream>

namespace semieq {

struct LemmaEntry {
    std::string id;
    bool hypotheses_held = false;
    bool conclusion_held = false; // only meaningful when hypotheses_held
    std::string detail;
};

struct LemmaReport {
    std::vector<LemmaEntry> entries;

    bool all_conclusions_hold() const {
        for (const auto& e : entries)
            if (e.hypotheses_held && !e.conclusion_held) return false;
        return true;
    }
};

struct TripleParts {
    Func fe, fo, ge, go, he, ho;
};

inline TripleParts split_triple(const SolutionTriple& t, const Involution& sigma) {
    auto f = even_odd_decompose(t.f, sigma);
    auto g = even_odd_decompose(t.g, sigma);
    auto h = even_odd_decompose(t.h, sigma);
    return {f.even, f.odd, g.even, g.odd, h.even, h.odd};
}

inline void require_solution(const Semigroup& s, const Involution& sigma,
                             const SolutionTriple& t) {
    if (!residual_main(s, sigma, t).zero)
        throw FieldError("checker requires a zero-residual solution triple");
}

// Unconditional structure of any solution: f^e central, f^o alternating,
// f^o vanishing on triple products, and the split even/odd identities.
inline LemmaReport check_solution_structure(const Semigroup& s, const Involution& sigma,
                                            const SolutionTriple& t) {
    require_solution(s, sigma, t);
    auto p = split_triple(t, sigma);
    int n = s.order();
    Scalar two = t.f.field->from_int(2);
    LemmaReport rep;

    LemmaEntry e1{"structure.even_central", true, is_central(p.fe, s).central, ""};
    rep.entries.push_back(e1);

    bool alternating = true;
    for (int x = 0; x < n && alternating; ++x)
        for (int y = 0; y < n && alternating; ++y)
            if (p.fo[s.op(x, y)] != -p.fo[s.op(y, x)]) alternating = false;
    rep.entries.push_back({"structure.odd_alternating", true, alternating, ""});

    bool triple_zero = true;
    for (int x = 0; x < n && triple_zero; ++x)
        for (int y = 0; y < n && triple_zero; ++y)
            for (int z = 0; z < n && triple_zero; ++z)
                if (!p.fo[s.op(s.op(x, y), z)].is_zero()) triple_zero = false;
    rep.entries.push_back({"structure.odd_vanishes_on_triples", true, triple_zero, ""});

    bool split_ok = true;
    for (int x = 0; x < n && split_ok; ++x)
        for (int y = 0; y < n && split_ok; ++y) {
            Scalar lhs_o = p.fo[s.op(x, y)] + p.fo[s.op(x, sigma(y))];
            Scalar rhs_o = two * (p.fo[x] * p.ge[y] + p.go[x] * p.fe[y] + p.ho[x] * p.he[y]);
            Scalar lhs_e = p.fe[s.op(x, y)] + p.fe[s.op(x, sigma(y))];
            Scalar rhs_e = two * (p.fe[x] * p.ge[y] + p.ge[x] * p.fe[y] + p.he[x] * p.he[y]);
            if (lhs_o != rhs_o || lhs_e != rhs_e) split_ok = false;
        }
    rep.entries.push_back({"structure.split_identities", true, split_ok, ""});
    return rep;
}

// f != 0 and f odd force f to vanish on products and (g,h) to be the
// one-parameter multiple family of f.
inline LemmaEntry check_odd_collapse(const Semigroup& s, const Involution& sigma,
                                     const SolutionTriple& t) {
    require_solution(s, sigma, t);
    LemmaEntry e{"odd_collapse", false, false, ""};
    if (t.f.is_zero() || !is_odd(t.f, sigma)) return e;
    e.hypotheses_held = true;
    bool odd_gh = is_odd(t.g, sigma) && is_odd(t.h, sigma);
    bool f_vanishes = t.f.zero_on(square_set(s));
    auto lambda = fit_scale(t.f.values, t.h.values);
    bool multiples = false;
    if (lambda) {
        Scalar half = t.f.field->from_int(2).inv();
        multiples = vec_eq(t.g.values, vec_scale(-(half * *lambda * *lambda), t.f.values));
    }
    e.conclusion_held = odd_gh && f_vanishes && multiples;
    if (!e.conclusion_held) e.detail = "odd-parts/vanishing/multiple structure failed";
    return e;
}

// h^e = lambda f^e with f^e nonzero on S^2: existence of mu with
// g^o + lambda h^o = mu f^o, plus the two-way case split.
inline LemmaEntry check_dependent_dichotomy(const Semigroup& s, const Involution& sigma,
                                            const SolutionTriple& t) {
    require_solution(s, sigma, t);
    LemmaEntry e{"dependent_dichotomy", false, false, ""};
    auto p = split_triple(t, sigma);
    auto sq = square_set(s);
    if (p.fe.zero_on(sq)) return e;
    auto lambda_opt = fit_scale(p.fe.values, p.he.values);
    if (!lambda_opt) return e;
    e.hypotheses_held = true;
    Scalar lambda = *lambda_opt;
    const Field& f = *t.f.field;
    Scalar half = f.from_int(2).inv();

    Func combo = p.go + lambda * p.ho;
    std::optional<Scalar> mu;
    if (!p.fo.is_zero()) mu = fit_scale(p.fo.values, combo.values);
    else if (combo.is_zero()) mu = f.zero();
    if (!mu) {
        e.detail = "no mu with g^o + lambda h^o = mu f^o";
        return e;
    }

    // Case 1: f^o = 0, g^o = -lambda h^o and the even part satisfies the
    // signed cosine-sine addition law with companion g^e + lambda^2/2 f^e.
    bool case1 = p.fo.is_zero() && p.go == -(lambda * p.ho);
    if (case1) {
        Func comp = p.ge + (half * lambda * lambda) * p.fe;
        for (int x = 0; x < s.order() && case1; ++x)
            for (int y = 0; y < s.order() && case1; ++y)
                if (p.fe[s.op(x, y)] !=
                    p.fe[x] * comp[y] + p.fe[y] * comp[x] - p.ho[x] * p.ho[y])
                    case1 = false;
    }

    // Case 2: g^e = -mu2 f^e, f^o vanishes on products, and the two even-part
    // product identities hold.
    bool case2 = false;
    auto mu2 = fit_scale(p.fe.values, p.ge.values);
    if (mu2) {
        Scalar m2 = -*mu2;
        case2 = p.fo.zero_on(sq) && (p.fo.is_zero() || m2 == *mu);
        Scalar coef = lambda * lambda - f.from_int(2) * m2;
        for (int x = 0; x < s.order() && case2; ++x)
            for (int y = 0; y < s.order() && case2; ++y) {
                if (p.fe[s.op(x, y)] + p.fe[s.op(sigma(y), x)] !=
                    f.from_int(2) * coef * p.fe[x] * p.fe[y])
                    case2 = false;
                Scalar rhs = coef * p.fe[x] * p.fe[y] + f.from_int(2) * m2 * p.fo[x] * p.fo[y] -
                             lambda * p.fo[x] * p.ho[y] - lambda * p.ho[x] * p.fo[y] +
                             p.ho[x] * p.ho[y];
                if (p.fe[s.op(x, sigma(y))] != rhs) case2 = false;
            }
    }

    e.conclusion_held = case1 || case2;
    if (!e.conclusion_held) e.detail = "neither branch of the dichotomy fits";
    return e;
}

// f^e nonzero but vanishing on S^2, h^e = lambda f^e: the even part of g is
// pinned and the odd parts satisfy two bilinear identities.
inline LemmaEntry check_zero_square_collapse(const Semigroup& s, const Involution& sigma,
                                             const SolutionTriple& t) {
    require_solution(s, sigma, t);
    LemmaEntry e{"zero_square_collapse", false, false, ""};
    auto p = split_triple(t, sigma);
    auto sq = square_set(s);
    if (p.fe.is_zero() || !p.fe.zero_on(sq)) return e;
    auto lambda_opt = fit_scale(p.fe.values, p.he.values);
    if (!lambda_opt) return e;
    e.hypotheses_held = true;
    Scalar lambda = *lambda_opt;
    const Field& f = *t.f.field;
    Scalar half = f.from_int(2).inv();
    Scalar coef = -(half * lambda * lambda);

    bool c1 = p.ge == coef * p.fe;
    Func k = coef * p.fo + p.go + lambda * p.ho;
    bool c2 = true, c3 = true;
    for (int x = 0; x < s.order(); ++x)
        for (int y = 0; y < s.order(); ++y) {
            if (p.fo[s.op(x, sigma(y))] != k[x] * p.fe[y] + p.fe[x] * k[y]) c2 = false;
            if (!(p.fo[x] * p.go[y] + p.go[x] * p.fo[y] + p.ho[x] * p.ho[y]).is_zero()) c3 = false;
        }
    e.conclusion_held = c1 && c2 && c3;
    if (!e.conclusion_held) {
        std::ostringstream os;
        os << "parts failing:" << (c1 ? "" : " even-g") << (c2 ? "" : " odd-split")
           << (c3 ? "" : " odd-bilinear");
        e.detail = os.str();
    }
    return e;
}

// rank{f^e, h^e} = 2: one of three structural shapes must hold.
inline LemmaEntry check_independent_trichotomy(const Semigroup& s, const Involution& sigma,
                                               const SolutionTriple& t) {
    require_solution(s, sigma, t);
    LemmaEntry e{"independent_trichotomy", false, false, ""};
    auto p = split_triple(t, sigma);
    if (func_rank({p.fe, p.he}).rank != 2) return e;
    e.hypotheses_held = true;
    const Field& f = *t.f.field;
    Scalar half = f.from_int(2).inv();
    auto sq = square_set(s);

    auto addition_law = [&](const Func& a, const Func& b, const Func& c) {
        for (int x = 0; x < s.order(); ++x)
            for (int y = 0; y < s.order(); ++y)
                if (a[s.op(x, y)] != a[x] * b[y] + b[x] * a[y] + c[x] * c[y]) return false;
        return true;
    };

    // Shape 1: all even and satisfying the plain addition law. Joint
    // independence of {f, g, h} is not required: triples with g in the span
    // of {f, h} otherwise escape all three shapes (e.g. the two-character
    // average on a 2-element group), yet carry the same structure.
    bool case1 = is_even(t.f, sigma) && is_even(t.g, sigma) && is_even(t.h, sigma) &&
                 addition_law(t.f, t.g, t.h);

    // Shape 2: even parts dependent and satisfying the addition law, odd part
    // of f vanishing on products, one beta tying all odd parts together.
    bool case2 = false;
    if (auto coeffs = express_in_span({p.fe.values, p.he.values}, p.ge.values)) {
        Scalar u = (*coeffs)[0], beta = (*coeffs)[1];
        case2 = u == half * beta * beta && p.fo.zero_on(sq) && addition_law(p.fe, p.ge, p.he) &&
                p.go == (-(half * beta * beta)) * p.fo && p.ho == (-beta) * p.fo;
    }

    // Shape 3: g in the span of f and h with the square relation, and f a
    // rank-one product through l = beta f + h.
    bool case3 = false;
    auto try_case3 = [&](const Scalar& beta) {
        Func l = beta * t.f + t.h;
        Func lo = even_odd_decompose(l, sigma).odd;
        if (lo.is_zero()) return false;
        if (t.g != (half * beta * beta) * t.f + beta * t.h) return false;
        for (int x = 0; x < s.order(); ++x)
            for (int y = 0; y < s.order(); ++y)
                if (t.f[s.op(x, sigma(y))] != l[x] * l[y]) return false;
        return true;
    };
    if (auto coeffs = express_in_span({t.f.values, t.h.values}, t.g.values))
        case3 = try_case3((*coeffs)[1]);
    if (!case3 && f.finite() && f.size() <= 64) {
        for (size_t i = 0; i < f.size() && !case3; ++i) case3 = try_case3(f.element(i));
    }

    e.conclusion_held = case1 || case2 || case3;
    if (!e.conclusion_held) e.detail = "no structural shape fits";
    return e;
}

inline LemmaReport check_conditional_lemmas(const Semigroup& s, const Involution& sigma,
                                            const SolutionTriple& t) {
    LemmaReport rep;
    rep.entries.push_back(check_odd_collapse(s, sigma, t));
    rep.entries.push_back(check_dependent_dichotomy(s, sigma, t));
    rep.entries.push_back(check_zero_square_collapse(s, sigma, t));
    rep.entries.push_back(check_independent_trichotomy(s, sigma, t));
    return rep;
}

// A sine-law solution for a nonzero chi should never be a combination of
// multiplicative functions. Returns a witness for every chi where the
// chi-additive space meets the multiplicative span nontrivially.
struct CharacterSpanCertificate {
    Func chi;
    Func phi; // nonzero chi-additive function inside the multiplicative span
};

inline std::vector<CharacterSpanCertificate> character_span_certificates(const Semigroup& s,
                                                                         const Field& field) {
    if (!field.finite()) throw FieldError("character span sweep needs a finite field");
    std::vector<CharacterSpanCertificate> certs;
    auto mult = enumerate_multiplicative(s, field);
    std::vector<Vec> mcols;
    for (const auto& m : mult)
        if (!m.is_zero()) mcols.push_back(m.values);
    for (const auto& chi : mult) {
        if (chi.is_zero()) continue;
        auto basis = chi_additive_basis(s, chi);
        if (basis.empty() || mcols.empty()) continue;
        // Kernel combos of [M | V]; a kernel vector with nonzero V-part is an
        // intersection witness.
        LinearSystem sys(field, mcols.size() + basis.size());
        for (int i = 0; i < s.order(); ++i) {
            Vec row = sys.zero_row();
            for (size_t j = 0; j < mcols.size(); ++j) row[j] = mcols[j][static_cast<size_t>(i)];
            for (size_t k = 0; k < basis.size(); ++k)
                row[mcols.size() + k] = -basis[k].values[static_cast<size_t>(i)];
            sys.add_row(std::move(row), field.zero());
        }
        for (const auto& ker : sys.nullspace()) {
            Func phi = Func::zero(field, s.order());
            for (size_t k = 0; k < basis.size(); ++k) phi = phi + ker[mcols.size() + k] * basis[k];
            if (!phi.is_zero()) {
                certs.push_back({chi, phi});
                break;
            }
        }
    }
    return certs;
}

// Structural fit for solutions of the sigma-free equation with f and h
// linearly independent: which of the three canonical shapes reproduces the
// triple.
struct PairStructureFit {
    int fitted_case = 0; // 1, 2, 3; 0 = no fit
    std::string detail;
};

inline PairStructureFit pair_structure_fit(const Semigroup& s, const SolutionTriple& t,
                                           const std::vector<Func>& mult) {
    const Field& f = *t.f.field;
    Involution id = identity_involution(s);
    if (!residual_main(s, id, t).zero)
        throw FieldError("pair_structure_fit requires a solution of the sigma-free equation");
    if (func_rank({t.f, t.h}).rank != 2)
        throw FieldError("pair_structure_fit requires f and h linearly independent");
    Scalar half = f.from_int(2).inv();

    // Shape 1: g multiplicative; some beta and multiplicative m with
    // m = g + beta h and h - beta f chi-additive (chi = g).
    auto try_case1 = [&](const SolutionTriple& u) {
        if (!is_multiplicative(s, u.g)) return false;
        std::vector<Scalar> betas = {f.zero()};
        for (const auto& m : mult)
            if (auto b = fit_scale(u.h.values, vec_sub(m.values, u.g.values))) betas.push_back(*b);
        for (const auto& beta : betas) {
            Func m = u.g + beta * u.h;
            Func phi = u.h - beta * u.f;
            if (is_multiplicative(s, m) && is_chi_additive(s, phi, u.g)) return true;
        }
        return false;
    };

    // Shape 2: some alpha != 0 and multiplicative chi with g - chi = alpha f,
    // and h satisfying a sine law against chi + 2 alpha f + (beta/2) h for
    // some beta fitted linearly.
    auto try_case2 = [&](const SolutionTriple& u) {
        for (const auto& chi : mult) {
            auto alpha = fit_scale(u.f.values, vec_sub(u.g.values, chi.values));
            if (!alpha || alpha->is_zero()) continue;
            Func w0 = chi + (f.from_int(2) * *alpha) * u.f;
            // h(xy) - h(x)w0(y) - w0(x)h(y) = beta h(x)h(y): linear in beta.
            std::optional<Scalar> beta;
            bool ok = true;
            for (int x = 0; x < s.order() && ok; ++x)
                for (int y = 0; y < s.order() && ok; ++y) {
                    Scalar lhs = u.h[s.op(x, y)] - u.h[x] * w0[y] - w0[x] * u.h[y];
                    Scalar prod = u.h[x] * u.h[y];
                    if (prod.is_zero()) {
                        if (!lhs.is_zero()) ok = false;
                    } else {
                        Scalar b = lhs / prod;
                        if (!beta) beta = b;
                        else if (*beta != b) ok = false;
                    }
                }
            if (ok) return true;
        }
        return false;
    };

    if (try_case1(t)) return {1, "g multiplicative shape"};
    if (try_case2(t)) return {2, "affine-multiplicative sine-law shape"};

    // Shape 3: some delta conjugates the triple into shape 1 or 2.
    auto conjugated = [&](const Scalar& delta) {
        SolutionTriple u;
        u.f = t.f;
        u.h = t.h + delta * t.f;
        u.g = t.g - delta * u.h + (half * delta * delta) * t.f;
        return u;
    };
    std::vector<Scalar> deltas;
    if (auto coeffs = express_in_span({t.f.values, t.h.values}, t.g.values))
        deltas.push_back((*coeffs)[1]);
    if (f.finite() && f.size() <= 64)
        for (size_t i = 1; i < f.size(); ++i) deltas.push_back(f.element(i));
    for (const auto& delta : deltas) {
        SolutionTriple u = conjugated(delta);
        if (!residual_main(s, id, u).zero) continue;
        if (try_case1(u) || try_case2(u))
            return {3, "conjugated shape, delta = " + delta.str()};
    }
    return {0, "no structural shape fits"};
}

} // namespace semieq
