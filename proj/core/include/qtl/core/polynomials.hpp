#pragma once

#include <vector>

#include "qtl/core/rational.hpp"

namespace qtl {

// Bernoulli numbers with B_1 = -1/2 (generating function t/(e^t - 1)).
const Rational& bernoulli_number(unsigned m);

// t e^{a t}/(e^t - 1) = sum B_m(a) t^m / m!
Rational bernoulli_polynomial(unsigned m, const Rational& a);
double bernoulli_polynomial(unsigned m, double a);

// 2 e^{a t}/(e^t + 1) = sum E_m(a) t^m / m!
Rational euler_polynomial(unsigned m, const Rational& a);

// Coefficients of B_m(x), lowest degree first.
std::vector<Rational> bernoulli_polynomial_coefficients(unsigned m);

}  // namespace qtl
