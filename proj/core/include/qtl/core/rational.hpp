#pragma once

#include <complex>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qtl {

using Integer = mpz_class;
using Rational = mpq_class;
using Complex = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846264338327950288;

// Parses "p/q", "-p/q" or an integer literal; the result is canonical.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);
// Canonical n/d.
inline Rational ratio(const Integer& n, const Integer& d)
{
    Rational r(n, d);
    r.canonicalize();
    return r;
}
std::string to_string(const Integer& z);

Integer floor(const Rational& r);
Integer ceil(const Rational& r);
// Representative of r mod 1 in [0, 1).
Rational frac(const Rational& r);
// Non-negative remainder of a mod m, m > 0.
Integer mod(const Integer& a, const Integer& m);
long to_long(const Integer& z);
double to_double(const Rational& r);

Rational pow(const Rational& base, unsigned exponent);
Integer factorial(unsigned n);
Integer binomial(long n, long k);

// e(x) = exp(2 pi i x), evaluated after reducing x mod 1 so large exponents stay accurate.
Complex e(const Rational& x);

// zeta_order^exponent with the exponent taken mod order.
class RootOfUnityPower {
public:
    RootOfUnityPower() = default;
    RootOfUnityPower(Integer order, Rational exponent);
    static RootOfUnityPower from_turns(const Rational& turns);

    const Integer& order() const { return order_; }
    const Rational& exponent() const { return exponent_; }
    // Canonical argument in [0,1): the value is e(turns()).
    const Rational& turns() const { return turns_; }
    Complex value() const { return e(turns_); }

    RootOfUnityPower operator*(const RootOfUnityPower& o) const;
    RootOfUnityPower pow(const Rational& p) const;
    RootOfUnityPower inverse() const;
    bool operator==(const RootOfUnityPower& o) const { return turns_ == o.turns_; }

private:
    Integer order_ = 1;
    Rational exponent_ = 0;
    Rational turns_ = 0;
};

}  // namespace qtl
