#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tdo {

using Rational = mpq_class;

/// Thrown when an operation receives operands of the wrong shape
/// (rank mismatch, Laurent exponent in a forbidden slot, ...).
class StructuralError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Thrown when an operation's mathematical precondition fails.
class PreconditionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("exponent overflow");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b)
{
    std::int64_t r = 0;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("exponent overflow");
    return r;
}

/// p/q in lowest terms; q != 0.
inline Rational ratio(std::int64_t p, std::int64_t q)
{
    if (q == 0)
        throw std::domain_error("zero denominator");
    Rational r(static_cast<long>(p), static_cast<long>(q));
    r.canonicalize();
    return r;
}

/// Always "p/q", also for integers ("3/1"), so the text form is one-to-one.
inline std::string to_string(const Rational& q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational parse_rational(std::string_view text)
{
    std::string s(text);
    if (s.empty())
        throw ParseError("empty rational");
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw ParseError("malformed rational '" + s + "'");
    if (q.get_den() == 0)
        throw ParseError("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

/// c (c-1) ... (c-k+1); defined for every integer c, including negative ones.
inline Rational falling(std::int64_t c, std::int64_t k)
{
    Rational r = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        mpz_class f(static_cast<long>(c));
        f -= static_cast<long>(i);
        r *= f;
        if (r == 0)
            break;
    }
    return r;
}

inline Rational factorial(std::int64_t k)
{
    if (k < 0)
        throw PreconditionError("factorial of negative integer");
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
    return Rational(r);
}

inline Rational binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r);
}

inline std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

} // namespace tdo
