#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "qtl/core/real.hpp"
#include "qtl/lfunc/lfunc.hpp"
#include "qtl/plumbing/plumbing.hpp"

namespace qtl::seifert {

// Normalization of the q_i: sum q_i/p_i = +1/P mod 1 (plus) or -1/P mod 1 (minus).
enum class Relation { plus, minus };

struct SeifertData {
    std::vector<long> p;
    std::vector<long> q;
    Relation relation = Relation::plus;
    long P = 1;

    int n() const { return static_cast<int>(p.size()); }
    // q_i for the other relation: p_i - q_i
    std::vector<long> q_for(Relation r) const;
};

// Validates n >= 3, p_i >= 2 pairwise coprime, 0 < q_i < p_i and the chosen relation.
SeifertData make_seifert(std::vector<long> p, std::vector<long> q, Relation r = Relation::plus);
// Solves the relation for q_i.
SeifertData make_seifert(std::vector<long> p, Relation r = Relation::plus);

// (1/4q) sum_{j=1}^{q-1} cot(pi j/q) cot(pi j p/q)
Real dedekind_sum(long q, long p);
// The same value as an exact rational (6q s is an integer); reconstructed from dedekind_sum.
Rational dedekind_sum_rational(long q, long p);

// 3 - 1/P + 12 sum_i s(q_i, p_i) with the plus-relation q_i and the sum taken mod p_i.
Real phi_invariant(const SeifertData& S);
Rational phi_rational(const SeifertData& S);
// phi/4
Rational default_delta(const SeifertData& S);

// p/q = k_1 - 1/(k_2 - 1/(... - 1/k_s)), all k_j >= 2.
std::vector<long> negative_continued_fraction(long p, long q);
Rational evaluate_continued_fraction(const std::vector<long>& k);

// Star-shaped plumbing: central weight e_0 and legs from the minus-relation continued fractions.
plumbing::PlumbingGraph seifert_plumbing(const SeifertData& S);

// G(q) = (q^{1/2} - q^{-1/2})^{2-n} prod_i (q^{1/2p_i} - q^{-1/2p_i}) = sum_{m >= m0} chi_m q^{m/2P}.
struct GSeriesData {
    std::vector<long> p;
    long P = 1;
    long m0 = 0;
    long mmax = 0;
    std::map<long, Integer> chi;  // nonzero coefficients only

    Integer coefficient(long m) const;
};

GSeriesData g_series(const std::vector<long>& p, long mmax);
// Closed form: sum over eps in {+-1}^n with m/P = sum eps_i/p_i + n - 2 + 2m', m' >= 0, of
// (-1)^n eps_1...eps_n binom(m' + n - 3, n - 3).
Integer chi_closed_form(const std::vector<long>& p, long m);
// G(z) with z = q^{1/2P}, as a Laurent polynomial ratio evaluated at a complex point.
Complex g_function(const std::vector<long>& p, Complex z);

// {-m^2/4P mod 1 : at most n - 3 of the p_i divide m}
std::set<Rational> cs_set(const std::vector<long>& p);

// Residue at x = m of e(tau x^2/4P) G(e^{pi i x/P}) divided by e(tau m^2/4P), as a polynomial
// in tau: coefficients g_0, ..., g_{n-2}.
struct ZStarResidue {
    long m = 0;
    int pole_order = 0;
    bool pole = false;
    std::vector<Complex> g;
};
ZStarResidue z_star_polynomial(const SeifertData& S, long m);

// K_nu(z) = (1/2)(z/2)^nu int_0^infty exp(-t - z^2/4t) t^{-nu-1} dt for Re(z^2) > 0.
Complex bessel_k(Complex nu, Complex z, double rel_tol = 1e-12);

// L_0(s) = sum_m chi_m (m^2/4P + Delta)^{-s}
lfunc::LSeriesHandle seifert_l_function(const SeifertData& S, const Rational& delta, int order = 8);

// Exponents of q^Delta Zhat_0 must all be of the form m^2/4P; returns the first offending exponent.
struct AlignmentReport {
    bool aligned = true;
    std::vector<Rational> offending;
};
AlignmentReport exponent_alignment(const SeifertData& S, const Rational& delta, const Rational& emax = 40);

struct FeqOptions {
    double eps = 0.1;           // ray angle
    double bessel_tol = 1e-13;  // tail cutoff of the residue sum
    long max_m = 0;             // 0: chosen from the decay of K
    double t0 = 1e-3;           // Mellin cut for the left side
    bool self_check = true;     // recompute with a doubled cutoff and at eps in {0.05, 0.1, 0.2}
};

struct FeqReport {
    Complex s;
    Rational delta;
    Complex lhs;
    Complex residue_sum;
    Complex ray_integral;
    Complex rhs;
    double difference = 0;
    long terms_used = 0;
    double tail_change = 0;    // |RHS(2 cutoff) - RHS(cutoff)|
    double eps_variation = 0;  // max ray-integral change over the other angles
    std::vector<std::string> diagnostics;

    std::string to_json() const;
};

// pi Gamma(s) L_0(s) against the residue/Bessel sum plus the rotated ray integral.
FeqReport functional_equation_check(const SeifertData& S, const Rational& delta, Complex s, const FeqOptions& opt = {});

}  // namespace qtl::seifert
