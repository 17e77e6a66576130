#pragma once

// Scalar arithmetic for the three coefficient domains the library supports:
// GF(p), GF(p^2) and tolerance-compared complex doubles.

#include <cmath>
#include <complex>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace semieq {

class FieldError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class FieldKind { PrimeField, QuadraticExtension, ComplexFloat };

inline bool is_prime(long long m) {
    if (m < 2) return false;
    for (long long d = 2; d * d <= m; ++d)
        if (m % d == 0) return false;
    return true;
}

class Scalar;

class Field {
public:
    FieldKind kind = FieldKind::PrimeField;
    long long p = 0;          // modulus, finite kinds
    long long nonresidue = 0; // d with w^2 = d, quadratic extension
    double tol = 0.0;         // complex kind

    static Field gf(long long p) {
        check_modulus(p);
        Field f;
        f.kind = FieldKind::PrimeField;
        f.p = p;
        return f;
    }

    // GF(p^2) as GF(p)[w] / (w^2 - d), d the smallest quadratic non-residue.
    static Field gf2(long long p) {
        check_modulus(p);
        Field f;
        f.kind = FieldKind::QuadraticExtension;
        f.p = p;
        std::vector<bool> sq(static_cast<size_t>(p), false);
        for (long long x = 0; x < p; ++x) sq[static_cast<size_t>(x * x % p)] = true;
        long long d = -1;
        for (long long c = 2; c < p; ++c)
            if (!sq[static_cast<size_t>(c)]) { d = c; break; }
        if (d < 0) throw FieldError("no quadratic non-residue mod " + std::to_string(p));
        f.nonresidue = d;
        return f;
    }

    static Field complex_field(double tol) {
        if (!(tol > 0)) throw FieldError("complex field needs tol > 0");
        Field f;
        f.kind = FieldKind::ComplexFloat;
        f.tol = tol;
        return f;
    }

    // Spec strings: "gf:p", "gf:p^2", "complex:tol".
    static Field parse(const std::string& spec) {
        auto colon = spec.find(':');
        if (colon == std::string::npos) throw FieldError("malformed field spec: " + spec);
        std::string head = spec.substr(0, colon), tail = spec.substr(colon + 1);
        try {
            if (head == "gf") {
                auto caret = tail.find('^');
                if (caret == std::string::npos) return gf(std::stoll(tail));
                long long p = std::stoll(tail.substr(0, caret));
                long long e = std::stoll(tail.substr(caret + 1));
                if (e != 2) throw FieldError("only quadratic extensions supported: " + spec);
                return gf2(p);
            }
            if (head == "complex") return complex_field(std::stod(tail));
        } catch (const std::invalid_argument&) {
            throw FieldError("malformed field spec: " + spec);
        } catch (const std::out_of_range&) {
            throw FieldError("malformed field spec: " + spec);
        }
        throw FieldError("malformed field spec: " + spec);
    }

    bool finite() const { return kind != FieldKind::ComplexFloat; }

    size_t size() const {
        if (!finite()) throw FieldError("complex field is not finite");
        return kind == FieldKind::PrimeField ? static_cast<size_t>(p)
                                             : static_cast<size_t>(p) * static_cast<size_t>(p);
    }

    std::string spec_string() const {
        switch (kind) {
        case FieldKind::PrimeField: return "gf:" + std::to_string(p);
        case FieldKind::QuadraticExtension: return "gf:" + std::to_string(p) + "^2";
        default: {
            std::ostringstream os;
            os << "complex:" << tol;
            return os.str();
        }
        }
    }

    bool operator==(const Field& o) const {
        return kind == o.kind && p == o.p && nonresidue == o.nonresidue && tol == o.tol;
    }
    bool operator!=(const Field& o) const { return !(*this == o); }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long long v) const;
    Scalar element(size_t idx) const; // finite only, idx in [0, size())

private:
    static void check_modulus(long long p) {
        if (!is_prime(p)) throw FieldError(std::to_string(p) + " is not prime");
        // The even/odd decomposition divides by 2.
        if (p == 2) throw FieldError("characteristic 2 unsupported");
        if (p > (1ll << 20)) throw FieldError("modulus too large for this library");
    }
};

class Scalar {
public:
    const Field* field = nullptr;
    long long a = 0, b = 0;       // a + b*w, finite kinds (b = 0 in prime fields)
    std::complex<double> z{0, 0}; // complex kind

    Scalar() = default;

    static Scalar finite(const Field& f, long long a, long long b = 0) {
        Scalar s;
        s.field = &f;
        s.a = mod(a, f.p);
        s.b = f.kind == FieldKind::QuadraticExtension ? mod(b, f.p) : 0;
        return s;
    }

    static Scalar complex_value(const Field& f, std::complex<double> z) {
        Scalar s;
        s.field = &f;
        s.z = z;
        return s;
    }

    bool is_zero() const {
        if (field->kind == FieldKind::ComplexFloat) return std::abs(z) <= field->tol;
        return a == 0 && b == 0;
    }

    bool operator==(const Scalar& o) const {
        require_same_field(o);
        if (field->kind == FieldKind::ComplexFloat) {
            double scale = std::max({1.0, std::abs(z), std::abs(o.z)});
            return std::abs(z - o.z) <= field->tol * scale;
        }
        return a == o.a && b == o.b;
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar operator+(const Scalar& o) const {
        require_same_field(o);
        if (field->kind == FieldKind::ComplexFloat) return complex_value(*field, z + o.z);
        return finite(*field, a + o.a, b + o.b);
    }

    Scalar operator-() const {
        if (field->kind == FieldKind::ComplexFloat) return complex_value(*field, -z);
        return finite(*field, -a, -b);
    }

    Scalar operator-(const Scalar& o) const { return *this + (-o); }

    Scalar operator*(const Scalar& o) const {
        require_same_field(o);
        switch (field->kind) {
        case FieldKind::ComplexFloat: return complex_value(*field, z * o.z);
        case FieldKind::PrimeField: return finite(*field, a * o.a);
        default:
            // (a + bw)(c + dw) = ac + bd*d0 + (ad + bc) w
            return finite(*field, a * o.a + b * o.b % field->p * field->nonresidue,
                          a * o.b + b * o.a);
        }
    }

    Scalar inv() const {
        if (is_zero()) throw FieldError("inverse of zero");
        switch (field->kind) {
        case FieldKind::ComplexFloat: return complex_value(*field, 1.0 / z);
        case FieldKind::PrimeField: return finite(*field, inv_mod(a, field->p));
        default: {
            // (a + bw)^-1 = (a - bw) / (a^2 - d b^2); the norm is nonzero since
            // d is a non-residue.
            long long p = field->p;
            long long norm = mod(a * a - field->nonresidue % p * (b * b % p), p);
            long long ninv = inv_mod(norm, p);
            return finite(*field, a * ninv, -b % p * ninv);
        }
        }
    }

    Scalar operator/(const Scalar& o) const { return *this * o.inv(); }

    // Frobenius-free "is in the prime subfield" probe (finite kinds).
    bool in_prime_subfield() const { return field->kind != FieldKind::ComplexFloat && b == 0; }

    size_t index() const {
        if (!field->finite()) throw FieldError("no canonical index over complex");
        return static_cast<size_t>(a) + static_cast<size_t>(b) * static_cast<size_t>(field->p);
    }

    std::string str() const {
        std::ostringstream os;
        switch (field->kind) {
        case FieldKind::PrimeField: os << a; break;
        case FieldKind::QuadraticExtension:
            if (b == 0) os << a;
            else if (a == 0) os << b << "w";
            else os << a << "+" << b << "w";
            break;
        default:
            os << z.real();
            if (z.imag() >= 0) os << "+" << z.imag() << "i";
            else os << z.imag() << "i";
            break;
        }
        return os.str();
    }

    void require_same_field(const Scalar& o) const {
        if (*field != *o.field) throw FieldError("mixed-field operands");
    }

    static long long mod(long long v, long long p) {
        long long r = v % p;
        return r < 0 ? r + p : r;
    }

private:
    static long long inv_mod(long long v, long long p) {
        long long t = 0, nt = 1, r = p, nr = mod(v, p);
        while (nr != 0) {
            long long q = r / nr;
            std::swap(t -= q * nt, nt);
            std::swap(r -= q * nr, nr);
        }
        return mod(t, p);
    }
};

inline Scalar Field::zero() const { return from_int(0); }
inline Scalar Field::one() const { return from_int(1); }

inline Scalar Field::from_int(long long v) const {
    if (kind == FieldKind::ComplexFloat)
        return Scalar::complex_value(*this, static_cast<double>(v));
    return Scalar::finite(*this, v);
}

inline Scalar Field::element(size_t idx) const {
    if (!finite()) throw FieldError("cannot index complex field elements");
    auto pp = static_cast<size_t>(p);
    return Scalar::finite(*this, static_cast<long long>(idx % pp),
                          static_cast<long long>(idx / pp));
}

// All square roots of a. Finite fields: exhaustive scan, 0, 1 or 2 results.
// Complex: the two principal roots (one when a = 0).
inline std::vector<Scalar> sqrt_all(const Scalar& a) {
    std::vector<Scalar> out;
    const Field& f = *a.field;
    if (f.kind == FieldKind::ComplexFloat) {
        if (a.is_zero()) return {f.zero()};
        auto r = std::sqrt(a.z);
        out.push_back(Scalar::complex_value(f, r));
        out.push_back(Scalar::complex_value(f, -r));
        return out;
    }
    for (size_t i = 0; i < f.size(); ++i) {
        Scalar r = f.element(i);
        if (r * r == a) out.push_back(r);
    }
    return out;
}

inline bool has_sqrt(const Scalar& a) { return !sqrt_all(a).empty(); }

// Magnitude of a residual entry: 0/1 indicator over finite fields, |z| over
// complex. Lets residual bookkeeping share one code path.
inline double abs_value(const Scalar& s) {
    if (s.field->kind == FieldKind::ComplexFloat) return std::abs(s.z);
    return s.is_zero() ? 0.0 : 1.0;
}

} // namespace semieq
