#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace quivstab {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// Invalid mathematical input (exit code 1 at the CLI).
struct DomainError : Error {
    using Error::Error;
};
// Search/enumeration budget exhausted or result indeterminate (exit code 2).
struct BudgetError : Error {
    using Error::Error;
};
// Violated internal assertion; indicates a bug, not bad input.
struct InternalError : Error {
    using Error::Error;
};

inline Integer rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline int sign_of(const Rational& r) {
    if (r > 0) return 1;
    if (r < 0) return -1;
    return 0;
}

// Canonical text form: "p" for integers, "p/q" otherwise (q > 0 always).
inline std::string rat_str(const Rational& r) {
    if (rat_den(r) == 1) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

inline double rat_double(const Rational& r) { return r.template convert_to<double>(); }

// Accepts "p", "p/q", optional leading sign on p.
inline Rational parse_rational(const std::string& s) {
    auto bad = [&] { throw DomainError("malformed rational: '" + s + "'"); };
    if (s.empty()) bad();
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0) bad();
        return Rational(num, den);
    } catch (const std::exception&) {
        bad();
    }
    return 0;  // unreachable
}

// Gaussian rational: exact point of Q(i), the central-charge scalar type.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }

    GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
    GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussianRational operator*(const Rational& c) const { return {re * c, im * c}; }
    GaussianRational conj() const { return {re, -im}; }
    Rational norm2() const { return re * re + im * im; }
    GaussianRational inv() const {
        Rational n = norm2();
        if (n == 0) throw DomainError("division by zero Gaussian rational");
        return {re / n, -im / n};
    }
    bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }
};

// Im(conj(a) * b): positive when b lies counterclockwise of a (within a half turn).
inline Rational cross(const GaussianRational& a, const GaussianRational& b) {
    return a.re * b.im - a.im * b.re;
}

// Re(conj(a) * b).
inline Rational dot(const GaussianRational& a, const GaussianRational& b) {
    return a.re * b.re + a.im * b.im;
}

// Membership in H = {m e^{i pi phi} : m > 0, 0 < phi <= 1}.
inline bool in_upper_half_plane(const GaussianRational& z) {
    return z.im > 0 || (z.im == 0 && z.re < 0);
}

}  // namespace quivstab
