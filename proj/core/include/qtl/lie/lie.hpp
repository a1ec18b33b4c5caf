#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qtl/gppv/qseries.hpp"
#include "qtl/lfunc/lfunc.hpp"
#include "qtl/seifert/seifert.hpp"

namespace qtl::lie {

// Simply-laced root data in simple-root coordinates; the inner product is x^T C y with C the
// Cartan matrix, so every root has length^2 = 2.
struct RootSystemData {
    char type = 'A';
    int rank = 0;
    std::vector<std::vector<long>> cartan;
    std::vector<std::vector<long>> positive_roots;  // simple-root coordinates
    std::vector<std::vector<Rational>> fundamental_weights;
    std::vector<Rational> rho;
    long index_xy = 1;  // [X : Y] = det C
    long weyl_order = 1;
    int dim_g = 0;

    std::string name() const;
    int num_positive() const { return static_cast<int>(positive_roots.size()); }
    Rational inner(const std::vector<Rational>& x, const std::vector<Rational>& y) const;
    long inner(const std::vector<long>& x, const std::vector<long>& y) const;
    Rational rho_norm2() const;
    long height(int root) const;
};

// Supported: A1, A2, A3, D4.
RootSystemData root_system(char type, int rank);
RootSystemData root_system(const std::string& name);

// Positive system s_i(Delta_+): alpha_i replaced by -alpha_i.
std::vector<std::vector<long>> reflected_positive_roots(const RootSystemData& R, int simple_index);

struct LieBlockSeries {
    seifert::SeifertData seifert;
    RootSystemData roots;
    QSeries series;  // full exponents, prefactor -(dim g) phi |rho|^2/2 included
};

// Phi(q) through exponent emax. positive_roots overrides Delta_+ (same lattice, another chamber).
LieBlockSeries homological_block(const seifert::SeifertData& S, const RootSystemData& R, const Rational& emax,
                                 const std::optional<std::vector<std::vector<long>>>& positive_roots = std::nullopt);

// (dim g) phi |rho|^2 / 2
Rational block_shift(const seifert::SeifertData& S, const RootSystemData& R);

// L(s) = sum prod chi_{m_alpha} zeta_k^{b} b^{-s}, b = |sum m_alpha alpha|^2/8P - shift.
// The t -> 0 expansion is built for |Delta_+| <= 3 (A1, A2).
lfunc::LSeriesHandle lie_l_function(const seifert::SeifertData& S, const RootSystemData& R, long k, int order = 6);

// lim_{t -> 0} Phi(zeta_k e^{-t}) by Richardson extrapolation of direct sums at t = 2^{-j}, as a
// polynomial in t (in t^{1/2} when half_powers is set).
Complex radial_limit_oracle(const lfunc::LSeriesHandle& h, int jmin = 6, int jmax = 16, bool half_powers = false);

// Which lambda are dropped from the finite sum: <lambda, alpha> in kZ for some / for every positive root.
enum class MFilter { some_root, every_root };

struct FiniteSumReport {
    Complex value;
    long cosets = 0;
    long excluded = 0;
    MFilter filter = MFilter::some_root;
    std::string to_json() const;
};

// Finite sum over lambda in X / kPY minus M, with the stated prefactor and the extra P^{-rank/2}.
FiniteSumReport radial_limit_finite_sum(const seifert::SeifertData& S, const RootSystemData& R, long k,
                                        MFilter filter = MFilter::some_root);

// Summand e(-|lambda|^2/2Pk) prod G(zeta_k^{<lambda, alpha>}), lambda in fundamental-weight coordinates.
Complex finite_sum_term(const seifert::SeifertData& S, const RootSystemData& R, long k, const std::vector<long>& lambda);

enum class LimitPath { finite_sum, l_value };

// Z(A1) / Z(SU(2), plumbing) = 2k S_00 e(-phi/2k) with S_00 = sqrt(2/k) sin(pi/k): the two
// normalizations of the invariant and the q^{-phi/2} offset between Phi and Zhat_0.
Complex su2_bridge(const seifert::SeifertData& S, long k);

// WRT invariant from the radial limit; simply-laced types only.
Complex wrt_g(const seifert::SeifertData& S, const RootSystemData& R, long k, LimitPath path = LimitPath::finite_sum);

}  // namespace qtl::lie
