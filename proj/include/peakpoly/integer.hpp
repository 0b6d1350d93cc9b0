#pragma once

// Arbitrary-precision integer and rational scalars (GMP C++ bindings).

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace peakpoly {

using Integer = mpz_class;
using Rational = mpq_class;

/// Error raised when an operation's precondition is violated.
class precondition_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline Integer pow2(unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

/// (-2)^e for e >= 0.
inline Integer neg2_pow(long e) {
    if (e < 0) throw precondition_error("neg2_pow: negative exponent");
    Integer r = pow2(static_cast<unsigned long>(e));
    return (e % 2 == 0) ? r : Integer(-r);
}

inline Integer sign_pow(long e) { return (e % 2 == 0) ? Integer(1) : Integer(-1); }

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

inline std::optional<std::int64_t> to_int64(const Integer& z) {
    if (!mpz_fits_slong_p(z.get_mpz_t())) return std::nullopt;
    return static_cast<std::int64_t>(z.get_si());
}

inline std::string to_string(const Integer& z) { return z.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace peakpoly
