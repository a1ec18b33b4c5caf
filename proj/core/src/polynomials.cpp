#include "qtl/core/polynomials.hpp"

#include <deque>
#include <mutex>

namespace qtl {

namespace {

std::mutex bernoulli_mutex;
std::deque<Rational> bernoulli_cache{Rational(1)};

}  // namespace

const Rational& bernoulli_number(unsigned m)
{
    std::lock_guard lock(bernoulli_mutex);
    // sum_{k<n+1} C(n+1,k) B_k = 0
    while (bernoulli_cache.size() <= m) {
        unsigned n = static_cast<unsigned>(bernoulli_cache.size());
        Rational s = 0;
        for (unsigned k = 0; k < n; ++k) s += Rational(binomial(n + 1, k)) * bernoulli_cache[k];
        Rational b = -s / Rational(n + 1);
        b.canonicalize();
        bernoulli_cache.push_back(b);
    }
    // deque never relocates existing elements on push_back
    return bernoulli_cache[m];
}

std::vector<Rational> bernoulli_polynomial_coefficients(unsigned m)
{
    std::vector<Rational> c(m + 1);
    for (unsigned k = 0; k <= m; ++k) c[m - k] = Rational(binomial(m, k)) * bernoulli_number(k);
    return c;
}

Rational bernoulli_polynomial(unsigned m, const Rational& a)
{
    auto c = bernoulli_polynomial_coefficients(m);
    Rational acc = 0;
    for (unsigned i = m + 1; i-- > 0;) acc = acc * a + c[i];
    acc.canonicalize();
    return acc;
}

double bernoulli_polynomial(unsigned m, double a)
{
    auto c = bernoulli_polynomial_coefficients(m);
    double acc = 0;
    for (unsigned i = m + 1; i-- > 0;) acc = acc * a + c[i].get_d();
    return acc;
}

Rational euler_polynomial(unsigned m, const Rational& a)
{
    Rational r = Rational(2, m + 1) *
                 (bernoulli_polynomial(m + 1, a) - Rational(Integer(1) << (m + 1)) * bernoulli_polynomial(m + 1, a / 2));
    r.canonicalize();
    return r;
}

}  // namespace qtl
