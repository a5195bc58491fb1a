#pragma once

#include "quivstab/rational.hpp"

#include <cstdint>
#include <string>

namespace quivstab {

// Field objects carry runtime context (the prime for F_p); all generic linear
// algebra and representation code is templated on the field object type.

struct QField {
    using Elem = Rational;

    static Elem zero() { return 0; }
    static Elem one() { return 1; }
    static Elem from_int(long long n) { return n; }
    static Elem add(const Elem& a, const Elem& b) { return a + b; }
    static Elem sub(const Elem& a, const Elem& b) { return a - b; }
    static Elem mul(const Elem& a, const Elem& b) { return a * b; }
    static Elem neg(const Elem& a) { return -a; }
    static Elem inv(const Elem& a) {
        if (a == 0) throw DomainError("division by zero");
        return 1 / a;
    }
    static Elem div(const Elem& a, const Elem& b) {
        if (b == 0) throw DomainError("division by zero");
        return a / b;
    }
    static bool is_zero(const Elem& a) { return a == 0; }
    static bool eq(const Elem& a, const Elem& b) { return a == b; }
    static std::string str(const Elem& a) { return rat_str(a); }
    bool operator==(const QField&) const { return true; }
};

struct FpField {
    using Elem = std::int64_t;
    std::int64_t p = 0;

    explicit FpField(std::int64_t prime = 0) : p(prime) {}

    Elem zero() const { return 0; }
    Elem one() const { return p == 1 ? 0 : 1; }
    Elem from_int(long long n) const {
        Elem r = n % p;
        return r < 0 ? r + p : r;
    }
    Elem add(Elem a, Elem b) const { return (a + b) % p; }
    Elem sub(Elem a, Elem b) const { return ((a - b) % p + p) % p; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem inv(Elem a) const {
        if (a == 0) throw DomainError("division by zero in F_p");
        // extended Euclid
        std::int64_t t = 0, nt = 1, r = p, nr = a;
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt;
            t = nt;
            nt = tmp;
            tmp = r - q * nr;
            r = nr;
            nr = tmp;
        }
        if (r != 1) throw DomainError("modulus is not prime");
        return t < 0 ? t + p : t;
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    static bool is_zero(Elem a) { return a == 0; }
    static bool eq(Elem a, Elem b) { return a == b; }
    static std::string str(Elem a) { return std::to_string(a); }
    bool operator==(const FpField& o) const { return p == o.p; }
};

// Reduces a rational mod p; empty when the denominator vanishes mod p.
inline std::optional<std::int64_t> reduce_mod_p(const Rational& r, std::int64_t p) {
    Integer num = rat_num(r) % p;
    Integer den = rat_den(r) % p;
    std::int64_t n = num.convert_to<std::int64_t>();
    std::int64_t d = den.convert_to<std::int64_t>();
    if (n < 0) n += p;
    if (d < 0) d += p;
    if (d == 0) return std::nullopt;
    FpField f(p);
    return f.div(n, d);
}

}  // namespace quivstab
