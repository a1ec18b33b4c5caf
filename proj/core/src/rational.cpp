#include "qtl/core/rational.hpp"

#include <cctype>
#include <cmath>

#include "qtl/core/error.hpp"

namespace qtl {

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    size_t b = 0;
    while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    s = s.substr(b);
    if (s.empty()) fail(ErrorCode::invalid_input, "empty rational literal");
    auto valid_int = [](const std::string& t) {
        size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!num.empty() && num[0] == '+') num.erase(0, 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        fail(ErrorCode::invalid_input, "malformed rational '" + std::string(text) + "'");
    Integer d(den);
    if (d == 0) fail(ErrorCode::invalid_input, "zero denominator in '" + std::string(text) + "'");
    Rational r(Integer(num), d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r)
{
    Rational c = r;
    c.canonicalize();
    return c.get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Integer floor(const Rational& r)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

Integer ceil(const Rational& r)
{
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

Rational frac(const Rational& r) { return r - Rational(floor(r)); }

Integer mod(const Integer& a, const Integer& m)
{
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

long to_long(const Integer& z)
{
    if (!z.fits_slong_p()) fail(ErrorCode::domain, "integer " + z.get_str() + " does not fit in a machine word");
    return z.get_si();
}

double to_double(const Rational& r) { return r.get_d(); }

Rational pow(const Rational& base, unsigned exponent)
{
    Rational out = 1;
    for (unsigned i = 0; i < exponent; ++i) out *= base;
    return out;
}

Integer factorial(unsigned n)
{
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

Integer binomial(long n, long k)
{
    if (k < 0) return 0;
    Integer r;
    if (n >= 0) {
        mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    } else {
        Integer nn = n;
        mpz_bin_ui(r.get_mpz_t(), nn.get_mpz_t(), static_cast<unsigned long>(k));
    }
    return r;
}

Complex e(const Rational& x)
{
    Rational f = frac(x);
    if (f > Rational(1, 2)) f -= 1;
    // exact values at the quarter turns keep cancellations clean
    if (f == 0) return {1.0, 0.0};
    if (f == Rational(1, 2)) return {-1.0, 0.0};
    if (f == Rational(1, 4)) return {0.0, 1.0};
    if (f == Rational(-1, 4)) return {0.0, -1.0};
    double a = 2.0 * pi * f.get_d();
    return {std::cos(a), std::sin(a)};
}

RootOfUnityPower::RootOfUnityPower(Integer order, Rational exponent)
    : order_(std::move(order)), exponent_(std::move(exponent))
{
    if (order_ <= 0) fail(ErrorCode::domain, "root of unity order must be positive");
    exponent_.canonicalize();
    turns_ = frac(exponent_ / Rational(order_));
}

RootOfUnityPower RootOfUnityPower::from_turns(const Rational& turns)
{
    return RootOfUnityPower(1, turns);
}

RootOfUnityPower RootOfUnityPower::operator*(const RootOfUnityPower& o) const
{
    Integer l;
    mpz_lcm(l.get_mpz_t(), order_.get_mpz_t(), o.order_.get_mpz_t());
    return RootOfUnityPower(l, (turns_ + o.turns_) * Rational(l));
}

RootOfUnityPower RootOfUnityPower::pow(const Rational& p) const
{
    return RootOfUnityPower(order_, exponent_ * p);
}

RootOfUnityPower RootOfUnityPower::inverse() const { return RootOfUnityPower(order_, -exponent_); }

}  // namespace qtl
