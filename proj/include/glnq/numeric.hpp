#ifndef GLNQ_NUMERIC_HPP
#define GLNQ_NUMERIC_HPP

// Exact integer/rational helpers shared by every module.

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace glnq {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1)
{
    if (den == 0)
        throw std::domain_error("zero denominator");
    Rational r{Integer(num), Integer(den)};
    r.canonicalize();
    return r;
}

inline Rational rational_pow(const Rational& base, long exp)
{
    if (exp < 0) {
        if (base == 0)
            throw std::domain_error("zero raised to a negative power");
        Rational inv = 1 / base;
        return rational_pow(inv, -exp);
    }
    Rational result = 1;
    Rational b = base;
    while (exp > 0) {
        if (exp & 1)
            result *= b;
        b *= b;
        exp >>= 1;
    }
    return result;
}

inline Integer integer_pow(long base, unsigned long exp)
{
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base), exp);
    if (base < 0 && (exp & 1))
        r = -r;
    return r;
}

inline Integer factorial(int n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

// Machine-word power with overflow detection.
inline std::uint64_t checked_pow(std::uint64_t base, int exp)
{
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
            throw std::overflow_error("integer power overflows 64 bits");
        r *= base;
    }
    return r;
}

inline std::vector<long> divisors(long n)
{
    std::vector<long> out;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0)
            out.push_back(d);
    return out;
}

inline int mobius(long n)
{
    if (n < 1)
        throw std::invalid_argument("mobius: argument must be positive");
    int result = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0)
                return 0;
            result = -result;
        }
    }
    if (n > 1)
        result = -result;
    return result;
}

inline long positive_mod(long a, long m)
{
    long r = a % m;
    return r < 0 ? r + m : r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

inline double to_double(const Rational& r) { return r.get_d(); }

} // namespace glnq

#endif
