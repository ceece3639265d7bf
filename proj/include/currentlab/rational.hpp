#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

namespace currentlab {

// mpq_class whose two-integer constructor always canonicalizes.
class Rational : public mpq_class {
public:
    using mpq_class::mpq_class;
    using mpq_class::operator=;
    Rational() = default;
    Rational(const Rational&) = default;
    Rational(Rational&&) = default;
    Rational& operator=(const Rational&) = default;
    Rational& operator=(Rational&&) = default;
    Rational(const mpq_class& q) : mpq_class(q) {}
    Rational(mpq_class&& q) : mpq_class(std::move(q)) {}
    template <class T, class U>
    Rational(const __gmp_expr<T, U>& e) : mpq_class(e) {}
    Rational(long p, long q) : mpq_class(p, q) { canonicalize(); }
    Rational(const mpz_class& p, const mpz_class& q) : mpq_class(p, q) { canonicalize(); }
};

// Accepts "p/q", "p", or a decimal like "0.25". Throws ParseError.
Rational parse_rational(const std::string& text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

// Representative of r modulo 1 in [0,1).
Rational frac(const Rational& r);

mpz_class floor_of(const Rational& r);
mpz_class ceil_of(const Rational& r);

double to_double(const Rational& r);

}  // namespace currentlab
