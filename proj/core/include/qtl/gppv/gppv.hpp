#pragma once

#include <functional>
#include <vector>

#include "qtl/gppv/qseries.hpp"
#include "qtl/plumbing/plumbing.hpp"

namespace qtl::gppv {

using VertexRule = std::function<Rational(int degree, long ell)>;

// Principal-value Laurent coefficient of (x - 1/x)^{2-deg} at x^ell.
Rational f_vertex(int degree, long ell);
Rational f_ell(const plumbing::LinkingData& L, const std::vector<Integer>& ell);

// Whether ell can carry a nonzero coefficient at a vertex of this degree.
bool in_vertex_support(int degree, long ell);

// -(3|V| + tr B)/4
Rational prefactor_exponent(const plumbing::LinkingData& L);
// Full q-exponent of the term labelled ell.
Rational term_exponent(const plumbing::LinkingData& L, const std::vector<Integer>& ell);

struct LatticeTerm {
    std::vector<Integer> ell;
    Rational exponent;  // prefactor included
    Rational coeff;     // F_ell
};

// Every ell in b + 2B Z^V with nonzero F_ell and exponent <= emax.
std::vector<LatticeTerm> enumerate_terms(const plumbing::LinkingData& L, const plumbing::SpincClass& b, const Rational& emax);

QSeries zhat_series(const plumbing::LinkingData& L, const plumbing::SpincClass& b, const Rational& emax);

struct IdentityReport {
    bool holds = true;
    long monomials_checked = 0;
    std::vector<long> first_mismatch;
};
// Compares 2^{|V>=3|} F_ell with an independent expansion of prod_I (x_I - 1/x_I)^{2-deg I}
// on the window |ell_I| <= window.
IdentityReport generating_identity_check(const plumbing::LinkingData& L, int window, const VertexRule& rule = f_vertex);

}  // namespace qtl::gppv
