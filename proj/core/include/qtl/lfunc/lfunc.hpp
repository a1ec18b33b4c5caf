#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qtl/asymptotics/asymptotics.hpp"

namespace qtl::lfunc {

struct DirichletTerm {
    Complex a;
    double b;
};

using TermSink = std::function<void(const DirichletTerm&)>;
// Emits every term with lo < b <= hi. Must be re-iterable.
using TermStream = std::function<void(double lo, double hi, const TermSink&)>;

// Branch for b < 0: b^{-s} = |b|^{-s} e^{-i pi s} (minus) or e^{+i pi s} (plus).
enum class Branch { minus, plus };

// L(s) = sum a b^{-s}. Terms with b > 0 come from the stream and carry the expansion of
// phi(t) = sum a e^{-bt} at t -> 0; terms with b < 0 are kept apart and terms with b = 0
// are folded into a constant.
struct LSeriesHandle {
    TermStream terms;
    std::vector<DirichletTerm> exceptional;
    Complex constant = 0;
    asymptotics::AsymptoticExpansion expansion;
    double decay = 0;  // smallest positive b
    std::optional<double> max_b;  // set when the series is finite
    std::optional<double> abscissa;
    Branch branch = Branch::minus;
    // Optional closed form of the continuation, used as an independent reference.
    std::function<Complex(Complex)> reference;
    std::vector<std::string> warnings;
};

// Finite Dirichlet polynomial; the expansion of phi is its Taylor series.
LSeriesHandle finite_series(const std::vector<DirichletTerm>& terms, int order = 12);
// sum_{n >= 0} (n + alpha)^{-s}
LSeriesHandle hurwitz_handle(const Rational& alpha, int order = 16);
LSeriesHandle riemann_zeta_handle(int order = 16);

// Splits off b <= 0 terms of a list; returns the positive part.
std::vector<DirichletTerm> split_exceptional(LSeriesHandle& h, const std::vector<DirichletTerm>& terms);

double abscissa(const LSeriesHandle& h);
std::vector<DirichletTerm> collect(const LSeriesHandle& h, double bmax);
// sum_{b > 0} a e^{-bt}
Complex phi(const LSeriesHandle& h, double t, double tol = 1e-16);
// Contribution of the b < 0 terms at s.
Complex exceptional_value(const LSeriesHandle& h, Complex s);

Complex l_direct(const LSeriesHandle& h, Complex s, double tol = 1e-12, long max_terms = 20000000);

enum class Nature { regular, residue_l, residue_gamma_l };
std::string to_string(Nature n);

struct ContinuationValue {
    Complex s;
    Complex value;
    Nature nature = Nature::regular;
    double error = 0;

    std::string to_json() const;
};

// n >= 0: L(-n). n < 0: Res_{s=-n} L.
ContinuationValue continuation_value(const LSeriesHandle& h, int n);
// Res_{s=-m/step} Gamma(s) L(s), including the entire parts.
ContinuationValue gamma_residue(const LSeriesHandle& h, int m);

Complex complex_gamma(Complex s);
Complex hurwitz_zeta(Complex s, double alpha);

// (1/Gamma(s)) [int_0^1 (phi - sum_{m<=M} c_m t^{m/step}) t^{s-1} + sum_{m<=M} c_m/(s+m/step)
// + int_1^infty phi t^{s-1}], plus the exceptional part. Below t0 the integrand is replaced by the
// remaining expansion terms.
struct MellinOptions {
    double t0 = 0.05;
    double tol = 1e-12;
};
Complex mellin_oracle(const LSeriesHandle& h, Complex s, int M, const MellinOptions& opt = {});

// Continued L(s): the attached reference when present, the Mellin representation otherwise.
Complex l_value(const LSeriesHandle& h, Complex s);

}  // namespace qtl::lfunc
