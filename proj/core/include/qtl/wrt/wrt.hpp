#pragma once

#include <map>
#include <string>
#include <vector>

#include "qtl/gppv/gppv.hpp"
#include "qtl/lfunc/lfunc.hpp"
#include "qtl/plumbing/plumbing.hpp"

namespace qtl::wrt {

// Exact value in [0, 1).
struct LinkingFormValue {
    Rational value;
};

// l_a^T B^{-1} l_b mod 1 for Spin^c representatives (independent of the choice of representative).
LinkingFormValue linking_form(const plumbing::LinkingData& L, const plumbing::SpincClass& a, const plumbing::SpincClass& b);
// a^T B^{-1} b mod 1 for arbitrary integer vectors.
LinkingFormValue linking_form(const plumbing::LinkingData& L, const std::vector<Integer>& a, const std::vector<Integer>& b);

// L_b(s) = sum_{l in b + 2B Z^V} F_l zeta_k^{E(l)} E(l)^{-s}, E the full q-exponent of the term.
// The expansion is in powers of t^{1/2} (step 2) and includes every coefficient through index order.
lfunc::LSeriesHandle gppv_l_function(const plumbing::LinkingData& L, const plumbing::SpincClass& b, long k, int order = 8);

// Expansion of Zhat_b(zeta_k e^{-t}) at t -> 0 including the terms with non-positive exponent.
asymptotics::AsymptoticExpansion radial_expansion(const plumbing::LinkingData& L, const plumbing::SpincClass& b, long k,
                                                  int order = 8);

enum class CoefficientRule { s_matrix, external_table };

struct CombinedLFunction {
    long k = 0;
    // orbit representative index (into spinc_classes) -> coefficient
    std::map<int, Complex> coefficients;
    std::map<int, lfunc::LSeriesHandle> components;
    lfunc::LSeriesHandle merged;
};

// Linear combination of handles; the expansions, terms and exceptional parts are added with weights.
lfunc::LSeriesHandle merge_handles(const std::vector<std::pair<Complex, const lfunc::LSeriesHandle*>>& parts);

// s_matrix: sum over H_1 of e(-k lk(a,a)) e(-lk(a,b)) / (2 sqrt|det B|) for every class b, folded onto
// the +-1 orbit representatives. external_table: coefficients keyed by class index.
CombinedLFunction combined_l(const plumbing::LinkingData& L, long k, CoefficientRule rule = CoefficientRule::s_matrix,
                             const std::map<int, Complex>& table = {}, int order = 8);
// Parses {"coeffs": [{"b": index, "c": [re, im]}, ...]}.
std::map<int, Complex> parse_coefficient_table(const std::string& json_text);

Complex wrt_invariant(const plumbing::LinkingData& L, long k, int order = 8);
Complex wrt_from_combined(const CombinedLFunction& c);

struct PoleCandidate {
    double s = 0;
    Complex residue;
    bool l_pole = false;  // a residue of L itself (must vanish for an entire function)
};

struct EntiretyReport {
    std::vector<PoleCandidate> candidates;
    double max_l_residue = 0;

    bool entire(double tol) const { return max_l_residue <= tol; }
    std::string to_json() const;
};

// Residues of L at the candidates s = -m/2 for m below 2 depth that are not non-positive integers,
// together with the Gamma(s) L(s) residues at s = 0, -1, ..., -(depth - 1).
EntiretyReport entirety_report(const lfunc::LSeriesHandle& h, int depth);

// Evaluates Zhat_b(zeta_k e^{-t}) at t = 2^{-j}, j = jmin..jmax, from the enumerated series and
// extrapolates to t = 0 as a polynomial in t (in t^{1/2} when half_powers is set).
Complex radial_limit_oracle(const plumbing::LinkingData& L, const plumbing::SpincClass& b, long k, int jmin = 6,
                            int jmax = 16, bool half_powers = false);

}  // namespace qtl::wrt
