#pragma once

// Independent exhaustive oracles over finite fields. The primary oracle
// enumerates all (g, h) pairs and solves the equation, which is linear in f,
// as a small linear system per pair; the secondary oracle scans all (f, g, h)
// triples directly. Both run on packed index tables for the field arithmetic
// and emit canonically ordered, re-verified solutions.

#include "semieq/classify.hpp"

#include <cstdint>
#include <thread>

namespace semieq {

class BudgetError : public FieldError {
public:
    using FieldError::FieldError;
};

// Full add/mul/neg/inv lookup tables indexed by Scalar::index().
struct FieldTables {
    const Field* field;
    uint32_t q;
    std::vector<uint16_t> add_t, mul_t, neg_t, inv_t;

    explicit FieldTables(const Field& f) : field(&f) {
        if (!f.finite()) throw FieldError("oracle tables need a finite field");
        if (f.size() > 512) throw FieldError("field too large for oracle tables (max 512)");
        q = static_cast<uint32_t>(f.size());
        add_t.resize(static_cast<size_t>(q) * q);
        mul_t.resize(static_cast<size_t>(q) * q);
        neg_t.resize(q);
        inv_t.resize(q);
        for (uint32_t i = 0; i < q; ++i) {
            Scalar a = f.element(i);
            neg_t[i] = static_cast<uint16_t>((-a).index());
            inv_t[i] = i == 0 ? 0 : static_cast<uint16_t>(a.inv().index());
            for (uint32_t j = 0; j < q; ++j) {
                Scalar b = f.element(j);
                add_t[static_cast<size_t>(i) * q + j] = static_cast<uint16_t>((a + b).index());
                mul_t[static_cast<size_t>(i) * q + j] = static_cast<uint16_t>((a * b).index());
            }
        }
    }

    uint16_t add(uint16_t a, uint16_t b) const { return add_t[static_cast<size_t>(a) * q + b]; }
    uint16_t mul(uint16_t a, uint16_t b) const { return mul_t[static_cast<size_t>(a) * q + b]; }
    uint16_t neg(uint16_t a) const { return neg_t[a]; }
    uint16_t inv(uint16_t a) const { return inv_t[a]; }
    uint16_t sub(uint16_t a, uint16_t b) const { return add(a, neg(b)); }
};

// Function encoded as a base-q integer, element 0 least significant.
inline uint64_t encode_func(const Func& fn) {
    uint64_t code = 0;
    uint64_t q = fn.field->size();
    for (size_t i = fn.size(); i-- > 0;) code = code * q + fn.values[i].index();
    return code;
}

inline Func decode_func(const Field& f, int n, uint64_t code) {
    Func out = Func::zero(f, n);
    uint64_t q = f.size();
    for (int i = 0; i < n; ++i) {
        out[i] = f.element(static_cast<size_t>(code % q));
        code /= q;
    }
    return out;
}

struct CodedSolution {
    uint64_t g = 0, h = 0, f = 0;
    bool operator<(const CodedSolution& o) const {
        if (g != o.g) return g < o.g;
        if (h != o.h) return h < o.h;
        return f < o.f;
    }
    bool operator==(const CodedSolution& o) const { return g == o.g && h == o.h && f == o.f; }
};

struct OracleResult {
    std::vector<CodedSolution> solutions; // sorted by (g, h, f)
    uint64_t systems_solved = 0;          // primary: (g,h) systems; scan: triples
};

namespace detail {

inline uint64_t pow_u64(uint64_t b, int e) {
    uint64_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > UINT64_MAX / b) return UINT64_MAX;
        r *= b;
    }
    return r;
}

// Residual check on packed codes, shared by both oracles.
inline bool coded_solves(const Semigroup& s, const Involution& sigma, const FieldTables& ft,
                         const std::vector<uint16_t>& fv, const std::vector<uint16_t>& gv,
                         const std::vector<uint16_t>& hv) {
    int n = s.order();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            size_t sx = static_cast<size_t>(x), sy = static_cast<size_t>(y);
            uint16_t rhs = ft.add(ft.add(ft.mul(fv[sx], gv[sy]), ft.mul(gv[sx], fv[sy])),
                                  ft.mul(hv[sx], hv[sy]));
            if (fv[static_cast<size_t>(s.op(x, sigma(y)))] != rhs) return false;
        }
    return true;
}

inline void decode_codes(uint64_t code, uint32_t q, int n, std::vector<uint16_t>& out) {
    for (int i = 0; i < n; ++i) {
        out[static_cast<size_t>(i)] = static_cast<uint16_t>(code % q);
        code /= q;
    }
}

} // namespace detail

// Primary oracle: for every (g, h), solve the n^2 x n linear system for f,
// enumerate its affine solution set, re-verify and emit. Deterministic
// output independent of the shard count.
inline OracleResult brute_force_solutions(const Semigroup& s, const Involution& sigma,
                                          const Field& field, int shards = 1,
                                          double budget = 1e8) {
    FieldTables ft(field);
    int n = s.order();
    uint32_t q = ft.q;
    uint64_t per_fn = detail::pow_u64(q, n);
    double systems = static_cast<double>(per_fn) * static_cast<double>(per_fn);
    if (systems > budget)
        throw BudgetError("oracle budget exceeded: " + std::to_string(systems) + " systems > " +
                          std::to_string(budget));
    if (shards < 1) shards = 1;

    // Row structure is fixed: row (x, y) constrains f at x*sigma(y), x and y.
    std::vector<int> pos_xsy(static_cast<size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            pos_xsy[static_cast<size_t>(x) * n + y] = s.op(x, sigma(y));

    auto run_shard = [&](uint64_t g_begin, uint64_t g_end, std::vector<CodedSolution>& sink) {
        std::vector<uint16_t> gv(static_cast<size_t>(n)), hv(static_cast<size_t>(n)),
            fv(static_cast<size_t>(n));
        size_t rows = static_cast<size_t>(n) * n;
        size_t width = static_cast<size_t>(n) + 1; // augmented column
        std::vector<uint16_t> mat(rows * width);
        std::vector<uint16_t> part(static_cast<size_t>(n));
        std::vector<std::vector<uint16_t>> basis;
        for (uint64_t gc = g_begin; gc < g_end; ++gc) {
            detail::decode_codes(gc, q, n, gv);
            for (uint64_t hc = 0; hc < per_fn; ++hc) {
                detail::decode_codes(hc, q, n, hv);
                // assemble: f(x sigma(y)) - g(y) f(x) - g(x) f(y) = h(x) h(y)
                std::fill(mat.begin(), mat.end(), 0);
                for (int x = 0; x < n; ++x)
                    for (int y = 0; y < n; ++y) {
                        uint16_t* row = &mat[(static_cast<size_t>(x) * n + y) * width];
                        size_t sx = static_cast<size_t>(x), sy = static_cast<size_t>(y);
                        int xsy = pos_xsy[sx * n + y];
                        row[xsy] = ft.add(row[xsy], 1);
                        row[x] = ft.sub(row[x], gv[sy]);
                        row[y] = ft.sub(row[y], gv[sx]);
                        row[n] = ft.mul(hv[sx], hv[sy]);
                    }
                // Gauss-Jordan over the packed codes.
                size_t r = 0;
                std::vector<int> pivot_col;
                for (int c = 0; c < n && r < rows; ++c) {
                    size_t best = rows;
                    for (size_t i = r; i < rows; ++i)
                        if (mat[i * width + static_cast<size_t>(c)] != 0) { best = i; break; }
                    if (best == rows) continue;
                    if (best != r)
                        for (size_t j = 0; j < width; ++j)
                            std::swap(mat[r * width + j], mat[best * width + j]);
                    uint16_t pinv = ft.inv(mat[r * width + static_cast<size_t>(c)]);
                    for (size_t j = 0; j < width; ++j)
                        mat[r * width + j] = ft.mul(pinv, mat[r * width + j]);
                    for (size_t i = 0; i < rows; ++i) {
                        if (i == r) continue;
                        uint16_t factor = mat[i * width + static_cast<size_t>(c)];
                        if (factor == 0) continue;
                        for (size_t j = 0; j < width; ++j)
                            mat[i * width + j] = ft.sub(mat[i * width + j], ft.mul(factor, mat[r * width + j]));
                    }
                    pivot_col.push_back(c);
                    ++r;
                }
                bool consistent = true;
                for (size_t i = r; i < rows && consistent; ++i)
                    if (mat[i * width + static_cast<size_t>(n)] != 0) consistent = false;
                if (!consistent) continue;
                std::fill(part.begin(), part.end(), 0);
                for (size_t i = 0; i < r; ++i)
                    part[static_cast<size_t>(pivot_col[i])] = mat[i * width + static_cast<size_t>(n)];
                basis.clear();
                std::vector<bool> is_pivot(static_cast<size_t>(n), false);
                for (int c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
                for (int c = 0; c < n; ++c) {
                    if (is_pivot[static_cast<size_t>(c)]) continue;
                    std::vector<uint16_t> v(static_cast<size_t>(n), 0);
                    v[static_cast<size_t>(c)] = 1;
                    for (size_t i = 0; i < r; ++i)
                        v[static_cast<size_t>(pivot_col[i])] =
                            ft.neg(mat[i * width + static_cast<size_t>(c)]);
                    basis.push_back(std::move(v));
                }
                // Enumerate the affine set and re-verify each member.
                uint64_t combos = detail::pow_u64(q, static_cast<int>(basis.size()));
                for (uint64_t cc = 0; cc < combos; ++cc) {
                    fv = part;
                    uint64_t rest = cc;
                    for (const auto& bvec : basis) {
                        auto coef = static_cast<uint16_t>(rest % q);
                        rest /= q;
                        if (coef == 0) continue;
                        for (int i = 0; i < n; ++i)
                            fv[static_cast<size_t>(i)] =
                                ft.add(fv[static_cast<size_t>(i)],
                                       ft.mul(coef, bvec[static_cast<size_t>(i)]));
                    }
                    if (!detail::coded_solves(s, sigma, ft, fv, gv, hv)) continue;
                    uint64_t fc = 0;
                    for (int i = n; i-- > 0;) fc = fc * q + fv[static_cast<size_t>(i)];
                    sink.push_back({gc, hc, fc});
                }
            }
        }
    };

    OracleResult out;
    out.systems_solved = per_fn * per_fn;
    if (shards == 1) {
        run_shard(0, per_fn, out.solutions);
    } else {
        std::vector<std::vector<CodedSolution>> sinks(static_cast<size_t>(shards));
        std::vector<std::thread> threads;
        uint64_t chunk = (per_fn + static_cast<uint64_t>(shards) - 1) / static_cast<uint64_t>(shards);
        for (int i = 0; i < shards; ++i) {
            uint64_t b = std::min<uint64_t>(static_cast<uint64_t>(i) * chunk, per_fn);
            uint64_t e = std::min<uint64_t>(b + chunk, per_fn);
            threads.emplace_back(run_shard, b, e, std::ref(sinks[static_cast<size_t>(i)]));
        }
        for (auto& t : threads) t.join();
        for (auto& sink : sinks)
            out.solutions.insert(out.solutions.end(), sink.begin(), sink.end());
    }
    std::sort(out.solutions.begin(), out.solutions.end());
    return out;
}

// Secondary oracle: direct scan of all q^(3n) triples. Slower and bounded by
// its own budget; exists to cross-check the primary oracle.
inline OracleResult full_scan_solutions(const Semigroup& s, const Involution& sigma,
                                        const Field& field, double budget = 1e7) {
    FieldTables ft(field);
    int n = s.order();
    uint32_t q = ft.q;
    uint64_t per_fn = detail::pow_u64(q, n);
    double triples = static_cast<double>(per_fn) * static_cast<double>(per_fn) *
                     static_cast<double>(per_fn);
    if (triples > budget)
        throw BudgetError("scan budget exceeded: " + std::to_string(triples) + " triples > " +
                          std::to_string(budget));
    OracleResult out;
    out.systems_solved = per_fn * per_fn * per_fn;
    std::vector<uint16_t> fv(static_cast<size_t>(n)), gv(static_cast<size_t>(n)),
        hv(static_cast<size_t>(n));
    for (uint64_t gc = 0; gc < per_fn; ++gc) {
        detail::decode_codes(gc, q, n, gv);
        for (uint64_t hc = 0; hc < per_fn; ++hc) {
            detail::decode_codes(hc, q, n, hv);
            for (uint64_t fc = 0; fc < per_fn; ++fc) {
                detail::decode_codes(fc, q, n, fv);
                if (detail::coded_solves(s, sigma, ft, fv, gv, hv))
                    out.solutions.push_back({gc, hc, fc});
            }
        }
    }
    std::sort(out.solutions.begin(), out.solutions.end());
    return out;
}

inline SolutionTriple decode_solution(const Field& f, int n, const CodedSolution& c) {
    return {decode_func(f, n, c.f), decode_func(f, n, c.g), decode_func(f, n, c.h)};
}

// Classification and structure sweep over a full oracle output.
struct CompletenessReport {
    size_t total = 0;
    std::map<std::string, size_t> histogram; // family name (or "unclassified") -> count
    size_t lifted = 0;                       // classified only over the extension
    size_t structure_failures = 0;           // solutions failing a structure check
    std::vector<size_t> unclassified;        // indices into the solution list
    std::vector<ClassifyResult> results;     // per solution, same order
};

inline CompletenessReport completeness_report(const Semigroup& s, const Involution& sigma,
                                              const Field& field, const SpaceCache& cache,
                                              const std::vector<CodedSolution>& sols,
                                              bool keep_results = false) {
    CompletenessReport rep;
    rep.total = sols.size();
    for (size_t i = 0; i < sols.size(); ++i) {
        SolutionTriple t = decode_solution(field, s.order(), sols[i]);
        ClassifyResult cr = classify(s, sigma, cache, t);
        if (cr.classified) {
            rep.histogram[family_name(cr.family)]++;
            if (cr.lifted) rep.lifted++;
        } else {
            rep.histogram["unclassified"]++;
            rep.unclassified.push_back(i);
        }
        auto structure = check_solution_structure(s, sigma, t);
        auto conditional = check_conditional_lemmas(s, sigma, t);
        if (!structure.all_conclusions_hold() || !conditional.all_conclusions_hold())
            rep.structure_failures++;
        if (keep_results) rep.results.push_back(std::move(cr));
    }
    return rep;
}

} // namespace semieq
