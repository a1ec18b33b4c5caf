#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qtl/asymptotics/asymptotics.hpp"
#include "qtl/lfunc/lfunc.hpp"

namespace qtl::bernoulli {

using asymptotics::Polynomial;
using asymptotics::WeightFunction;

// Homogeneous polynomial weight with non-negative coefficients.
struct WeightForm {
    int dimension = 0;
    Polynomial w;
    int degree = 0;

    double value(const std::vector<double>& x) const;
    Real value(const std::vector<Real>& x) const;
};

WeightForm make_weight_form(int n, Polynomial w);

// Visits every l in offset + Z_{>=0}^N with w(l + alpha) <= bound; throws on a non-positive value.
void enumerate_points(const WeightFunction& F, const std::vector<Rational>& alpha, const WeightForm& w, double bound,
                      const std::function<void(const std::vector<long>&, double)>& visit);

// sum_l F(l) prod_i (l_i + alpha_i)^{-s_i}, coordinatewise through Hurwitz sums.
Complex multi_l_direct(const WeightFunction& F, const std::vector<Rational>& alpha, const std::vector<Complex>& s);

// Res_{s_1=-m_1} ... Res_{s_N=-m_N} Gamma(s_1)...Gamma(s_N) L(s_1, ..., s_N; F, alpha).
Rational multi_residue(const WeightFunction& F, const std::vector<Rational>& alpha, const MultiIndex& m);

// L(s; F, alpha, w) = sum_l F(l) w(l + alpha)^{-s} with the expansion of the theta sum attached (step = deg w).
lfunc::LSeriesHandle weighted_handle(const WeightFunction& F, const std::vector<Rational>& alpha, const WeightForm& w,
                                     int order);
Complex weighted_l(const WeightFunction& F, const std::vector<Rational>& alpha, const WeightForm& w, Complex s,
                   double tol = 1e-12);

// Right-hand side of the relation: sum_{|m| = M} (-1)^{|m|} d^m e^{-w}(0) multi_residue(m).
double weighted_residue(const WeightFunction& F, const std::vector<Rational>& alpha, const WeightForm& w, int M);

// A zero window picks one from the degree of w: the fit must stay where the exponentially
// small, non-polynomial part of the theta sum is negligible.
struct FitOptions {
    int nodes = 18;
    double u_lo = 0;
    double u_hi = 0;
};

// Coefficients c_M of sum_l F(l) exp(-w(u (l + alpha))) ~ sum_M c_M u^M, fitted from extended-precision
// direct sums; independent of the Bernoulli machinery.
std::map<int, Real> theta_fit(const WeightFunction& F, const std::vector<Rational>& alpha, const WeightForm& w,
                              const FitOptions& opt = {});

struct RelationReport {
    int M = 0;
    Complex lhs;
    Complex rhs;
    double abs_diff = 0;

    std::string to_json() const;
};

// lhs: Res_{s=-M/d} Gamma(s) L(s; F, alpha, w) from the fitted theta sum; rhs: the Bernoulli side.
RelationReport relation_check(const WeightFunction& F, const std::vector<Rational>& alpha, const WeightForm& w, int M,
                              const FitOptions& opt = {});

}  // namespace qtl::bernoulli
