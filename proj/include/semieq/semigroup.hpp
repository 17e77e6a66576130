#pragma once

// Finite semigroups as dense Cayley tables, their involutive automorphisms
// and structural subsets.

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace semieq {

class SemigroupError : public std::runtime_error {
public:
    explicit SemigroupError(const std::string& msg,
                            std::vector<std::array<int, 3>> witnesses = {})
        : std::runtime_error(msg), witnesses(std::move(witnesses)) {}
    std::vector<std::array<int, 3>> witnesses; // violating triples, when relevant
};

class Semigroup {
public:
    // Validates ranges and associativity over all n^3 triples; throws with the
    // full witness list on failure.
    static Semigroup validate(const std::vector<std::vector<int>>& raw) {
        int n = static_cast<int>(raw.size());
        if (n < 1 || n > 8) throw SemigroupError("order must be in 1..8");
        std::vector<int> t(static_cast<size_t>(n) * n);
        for (int x = 0; x < n; ++x) {
            if (static_cast<int>(raw[x].size()) != n)
                throw SemigroupError("table is not square");
            for (int y = 0; y < n; ++y) {
                int v = raw[x][y];
                if (v < 0 || v >= n)
                    throw SemigroupError("entry out of range at (" + std::to_string(x) + "," +
                                         std::to_string(y) + ")");
                t[static_cast<size_t>(x) * n + y] = v;
            }
        }
        Semigroup s;
        s.n_ = n;
        s.t_ = std::move(t);
        std::vector<std::array<int, 3>> bad;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z)
                    if (s.op(s.op(x, y), z) != s.op(x, s.op(y, z)))
                        bad.push_back({x, y, z});
        if (!bad.empty())
            throw SemigroupError("composition is not associative (" +
                                     std::to_string(bad.size()) + " violating triples)",
                                 std::move(bad));
        return s;
    }

    int order() const { return n_; }
    int op(int x, int y) const { return t_[static_cast<size_t>(x) * n_ + y]; }

    std::vector<std::vector<int>> rows() const {
        std::vector<std::vector<int>> out(static_cast<size_t>(n_));
        for (int x = 0; x < n_; ++x) {
            out[static_cast<size_t>(x)].resize(static_cast<size_t>(n_));
            for (int y = 0; y < n_; ++y) out[static_cast<size_t>(x)][static_cast<size_t>(y)] = op(x, y);
        }
        return out;
    }

    bool operator==(const Semigroup& o) const { return n_ == o.n_ && t_ == o.t_; }

private:
    int n_ = 0;
    std::vector<int> t_;
};

struct Involution {
    std::vector<int> perm;

    int operator()(int x) const { return perm[static_cast<size_t>(x)]; }
    bool is_identity() const {
        for (size_t i = 0; i < perm.size(); ++i)
            if (perm[i] != static_cast<int>(i)) return false;
        return true;
    }
};

inline Involution identity_involution(const Semigroup& s) {
    Involution sigma;
    sigma.perm.resize(static_cast<size_t>(s.order()));
    std::iota(sigma.perm.begin(), sigma.perm.end(), 0);
    return sigma;
}

// Both defining laws checked directly.
inline bool is_involutive_automorphism(const Semigroup& s, const std::vector<int>& perm) {
    int n = s.order();
    if (static_cast<int>(perm.size()) != n) return false;
    for (int x = 0; x < n; ++x) {
        if (perm[static_cast<size_t>(x)] < 0 || perm[static_cast<size_t>(x)] >= n) return false;
        if (perm[static_cast<size_t>(perm[static_cast<size_t>(x)])] != x) return false;
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (perm[static_cast<size_t>(s.op(x, y))] !=
                s.op(perm[static_cast<size_t>(x)], perm[static_cast<size_t>(y)]))
                return false;
    return true;
}

inline Involution validate_involution(const Semigroup& s, std::vector<int> perm) {
    if (!is_involutive_automorphism(s, perm))
        throw SemigroupError("permutation is not an involutive automorphism");
    return Involution{std::move(perm)};
}

// All involutive automorphisms, identity first, then lexicographic.
inline std::vector<Involution> involutive_automorphisms(const Semigroup& s) {
    int n = s.order();
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Involution> out;
    do {
        if (is_involutive_automorphism(s, perm)) out.push_back(Involution{perm});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

inline std::vector<int> square_set(const Semigroup& s) {
    std::set<int> m;
    for (int x = 0; x < s.order(); ++x)
        for (int y = 0; y < s.order(); ++y) m.insert(s.op(x, y));
    return {m.begin(), m.end()};
}

// Every associative table on [0,n), deduplicated only by literal equality.
inline std::vector<Semigroup> all_semigroups(int n) {
    if (n < 1 || n > 3) throw SemigroupError("exhaustive generation supports n in 1..3");
    std::vector<Semigroup> out;
    size_t cells = static_cast<size_t>(n) * n;
    size_t total = 1;
    for (size_t i = 0; i < cells; ++i) total *= static_cast<size_t>(n);
    std::vector<std::vector<int>> raw(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (size_t code = 0; code < total; ++code) {
        size_t c = code;
        for (size_t i = 0; i < cells; ++i) {
            raw[i / n][i % n] = static_cast<int>(c % n);
            c /= static_cast<size_t>(n);
        }
        try {
            out.push_back(Semigroup::validate(raw));
        } catch (const SemigroupError&) {
        }
    }
    return out;
}

inline std::vector<std::string> catalog_names() {
    return {"trivial", "z2", "z3", "z4", "klein4", "null2", "null3", "leftzero2", "leftzero3", "rightzero3"};
}

inline Semigroup catalog(const std::string& name) {
    auto cyclic = [](int n) {
        std::vector<std::vector<int>> t(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) t[static_cast<size_t>(x)][static_cast<size_t>(y)] = (x + y) % n;
        return Semigroup::validate(t);
    };
    auto null_sg = [](int n) {
        std::vector<std::vector<int>> t(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
        return Semigroup::validate(t);
    };
    auto leftzero = [](int n) {
        std::vector<std::vector<int>> t(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) t[static_cast<size_t>(x)][static_cast<size_t>(y)] = x;
        return Semigroup::validate(t);
    };
    auto rightzero = [](int n) {
        std::vector<std::vector<int>> t(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) t[static_cast<size_t>(x)][static_cast<size_t>(y)] = y;
        return Semigroup::validate(t);
    };
    if (name == "trivial") return cyclic(1);
    if (name == "z2") return cyclic(2);
    if (name == "z3") return cyclic(3);
    if (name == "z4") return cyclic(4);
    if (name == "klein4") {
        // Z/2 x Z/2 with elements coded as bit pairs; composition is xor.
        std::vector<std::vector<int>> t(4, std::vector<int>(4));
        for (int x = 0; x < 4; ++x)
            for (int y = 0; y < 4; ++y) t[static_cast<size_t>(x)][static_cast<size_t>(y)] = x ^ y;
        return Semigroup::validate(t);
    }
    if (name == "null2") return null_sg(2);
    if (name == "null3") return null_sg(3);
    if (name == "leftzero2") return leftzero(2);
    if (name == "leftzero3") return leftzero(3);
    if (name == "rightzero3") return rightzero(3);
    std::string names;
    for (const auto& n : catalog_names()) names += (names.empty() ? "" : ", ") + n;
    throw SemigroupError("unknown catalog name '" + name + "' (valid: " + names + ")");
}

} // namespace semieq
