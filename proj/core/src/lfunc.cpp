#include "qtl/lfunc/lfunc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <sstream>

#include "json.hpp"
#include "qtl/core/polynomials.hpp"
#include "qtl/core/quadrature.hpp"

namespace qtl::lfunc {

using asymptotics::AsymptoticExpansion;

std::vector<DirichletTerm> split_exceptional(LSeriesHandle& h, const std::vector<DirichletTerm>& terms)
{
    std::vector<DirichletTerm> positive;
    bool zero_seen = false;
    for (auto& t : terms) {
        if (t.b > 0) positive.push_back(t);
        else if (t.b < 0) h.exceptional.push_back(t);
        else {
            h.constant += t.a;
            zero_seen = true;
        }
    }
    if (zero_seen) h.warnings.push_back("terms with b = 0 carried as a constant (s = 0 only)");
    std::sort(positive.begin(), positive.end(), [](auto& x, auto& y) { return x.b < y.b; });
    return positive;
}

LSeriesHandle finite_series(const std::vector<DirichletTerm>& terms, int order)
{
    LSeriesHandle h;
    auto positive = std::make_shared<std::vector<DirichletTerm>>(split_exceptional(h, terms));
    h.terms = [positive](double lo, double hi, const TermSink& sink) {
        for (auto& t : *positive)
            if (t.b > lo && t.b <= hi) sink(t);
    };
    h.decay = positive->empty() ? 0.0 : positive->front().b;
    h.max_b = positive->empty() ? 0.0 : positive->back().b;
    h.abscissa = -std::numeric_limits<double>::infinity();
    h.expansion.order = order;
    for (int m = 0; m <= order; ++m) {
        Complex c = 0;
        for (auto& t : *positive) c += t.a * std::pow(-t.b, m);
        h.expansion.coefficients[m] = c / factorial(m).get_d();
    }
    return h;
}

LSeriesHandle hurwitz_handle(const Rational& alpha, int order)
{
    if (alpha <= 0) fail(ErrorCode::domain, "Hurwitz shift must be positive");
    LSeriesHandle h;
    const double a = alpha.get_d();
    h.terms = [a](double lo, double hi, const TermSink& sink) {
        for (double n = std::max(0.0, std::floor(lo - a)); n + a <= hi; n += 1)
            if (n + a > lo) sink({1.0, n + a});
    };
    h.decay = a;
    asymptotics::ExpPolynomialProbe ex(1, {{{1}, Rational(1)}});
    h.expansion = asymptotics::asymptotic_coefficients(asymptotics::indicator(1), {alpha}, ex, order);
    h.reference = [a](Complex s) { return hurwitz_zeta(s, a); };
    return h;
}

LSeriesHandle riemann_zeta_handle(int order) { return hurwitz_handle(Rational(1), order); }

double abscissa(const LSeriesHandle& h)
{
    if (h.abscissa) return *h.abscissa;
    double sigma = -std::numeric_limits<double>::infinity();
    for (auto& [m, c] : h.expansion.coefficients)
        if (m < 0 && std::abs(c) > 1e-12) sigma = std::max(sigma, -static_cast<double>(m) / h.expansion.step);
    return sigma;
}

std::vector<DirichletTerm> collect(const LSeriesHandle& h, double bmax)
{
    std::vector<DirichletTerm> out;
    h.terms(0.0, bmax, [&](const DirichletTerm& t) { out.push_back(t); });
    std::sort(out.begin(), out.end(), [](auto& x, auto& y) { return x.b < y.b; });
    return out;
}

namespace {

// Terms of a handle sorted by b, large enough for phi(t) at every t >= tmin.
struct TermTable {
    std::vector<DirichletTerm> terms;

    TermTable(const LSeriesHandle& h, double tmin, double tol)
    {
        double hi = std::max(2 * h.decay, 40.0 / tmin);
        h.terms(0.0, hi, [&](const DirichletTerm& t) { terms.push_back(t); });
        Complex total = 0;
        for (auto& t : terms) total += t.a * std::exp(-t.b * tmin);
        for (int round = 0; round < 60; ++round) {
            double shell = 0;
            h.terms(hi, 2 * hi, [&](const DirichletTerm& t) {
                terms.push_back(t);
                shell += std::abs(t.a) * std::exp(-t.b * tmin);
            });
            hi *= 2;
            if (shell <= tol * std::max(1.0, std::abs(total))) break;
        }
        std::sort(terms.begin(), terms.end(), [](auto& x, auto& y) { return x.b < y.b; });
    }

    Complex phi(double t, double tol) const
    {
        Complex sum = 0;
        double chunk = 0;
        double chunk_end = 40.0 / t;
        for (auto& term : terms) {
            if (term.b > chunk_end) {
                if (chunk <= tol * std::max(1.0, std::abs(sum))) return sum;
                chunk = 0;
                chunk_end *= 2;
            }
            Complex v = term.a * std::exp(-term.b * t);
            sum += v;
            chunk += std::abs(v);
        }
        return sum;
    }
};

Complex branch_power(double b, Complex s, Branch br)
{
    const Complex i(0, 1);
    Complex rot = std::exp((br == Branch::minus ? -i : i) * pi * s);
    return std::exp(-s * std::log(std::abs(b))) * rot;
}

bool is_nonpositive_integer(Complex s)
{
    return s.imag() == 0 && s.real() <= 0 && s.real() == std::round(s.real());
}

}  // namespace

Complex phi(const LSeriesHandle& h, double t, double tol)
{
    if (!(t > 0)) fail(ErrorCode::domain, "phi needs t > 0");
    return TermTable(h, t, tol).phi(t, tol);
}

Complex exceptional_value(const LSeriesHandle& h, Complex s)
{
    Complex v = 0;
    for (auto& t : h.exceptional) v += t.a * branch_power(t.b, s, h.branch);
    return v;
}

Complex l_direct(const LSeriesHandle& h, Complex s, double tol, long max_terms)
{
    const double sigma = abscissa(h);
    if (!(s.real() > sigma)) {
        std::ostringstream os;
        os << "Re(s) = " << s.real() << " is not beyond the abscissa of convergence " << sigma;
        fail(ErrorCode::domain, os.str());
    }
    const int step = h.expansion.step;
    // smooth tail: phi ~ c t^mu (mu < 0) is the Laplace transform of c b^{-mu-1}/Gamma(-mu)
    auto tail = [&](double x) {
        Complex v = 0;
        for (auto& [m, c] : h.expansion.coefficients) {
            if (m >= 0) continue;
            double mu = static_cast<double>(m) / step;
            v += c / std::tgamma(-mu) * std::exp(-(mu + s) * std::log(x)) / (mu + s);
        }
        return v;
    };
    Complex partial = 0;
    double last = 0;
    long count = 0;
    auto add = [&](const DirichletTerm& t) {
        partial += t.a * std::exp(-s * std::log(t.b));
        last = std::max(last, t.b);
        ++count;
    };
    double x = std::max(1.0, 4 * h.decay);
    h.terms(0.0, x, add);
    std::optional<Complex> prev;
    double prev_err = 0;
    int stable = 0;
    while (count <= max_terms) {
        std::vector<DirichletTerm> shell;
        h.terms(x, 2 * x, [&](const DirichletTerm& t) { shell.push_back(t); });
        double next = 2 * x;
        for (auto& t : shell) next = std::min(next, t.b);
        Complex cur = partial + tail(shell.empty() ? 2 * x : 0.5 * (last + next));
        if (prev) {
            prev_err = std::abs(cur - *prev);
            stable = prev_err <= tol ? stable + 1 : 0;
            // an infinite stream may have gaps, so ask for repeated agreement
            if (h.max_b ? x >= *h.max_b : stable >= 3) {
                Complex v = cur + exceptional_value(h, s);
                if (s == Complex(0)) v += h.constant;
                return v;
            }
        }
        prev = cur;
        for (auto& t : shell) add(t);
        x *= 2;
    }
    std::ostringstream os;
    os << "direct summation stalled after " << count << " terms; last change " << prev_err;
    fail(ErrorCode::convergence, os.str());
}

std::string to_string(Nature n)
{
    switch (n) {
    case Nature::regular: return "regular";
    case Nature::residue_l: return "residue_L";
    case Nature::residue_gamma_l: return "residue_GammaL";
    }
    return "regular";
}

std::string ContinuationValue::to_json() const
{
    nlohmann::ordered_json j;
    j["s"] = {s.real(), s.imag()};
    j["value"] = {value.real(), value.imag()};
    j["nature"] = to_string(nature);
    j["error"] = error;
    return j.dump();
}

ContinuationValue continuation_value(const LSeriesHandle& h, int n)
{
    const int step = h.expansion.step;
    Complex c = h.expansion.coefficient(n * step);
    ContinuationValue out;
    out.s = Complex(-n);
    if (n >= 0) {
        out.nature = Nature::regular;
        out.value = (n % 2 ? -1.0 : 1.0) * factorial(n).get_d() * c;
        for (auto& t : h.exceptional) out.value += t.a * std::pow(t.b, n);
        if (n == 0) out.value += h.constant;
    } else {
        out.nature = Nature::residue_l;
        out.value = c / factorial(-n - 1).get_d();
    }
    return out;
}

ContinuationValue gamma_residue(const LSeriesHandle& h, int m)
{
    const int step = h.expansion.step;
    ContinuationValue out;
    out.s = Complex(-static_cast<double>(m) / step);
    out.nature = Nature::residue_gamma_l;
    out.value = h.expansion.coefficient(m);
    if (m >= 0 && m % step == 0) {
        int n = m / step;
        Complex entire = 0;
        for (auto& t : h.exceptional) entire += t.a * std::pow(t.b, n);
        if (n == 0) entire += h.constant;
        out.value += (n % 2 ? -1.0 : 1.0) / factorial(n).get_d() * entire;
    }
    return out;
}

Complex complex_gamma(Complex s)
{
    if (s.real() < 0.5) return pi / (std::sin(pi * s) * complex_gamma(1.0 - s));
    static const double g = 7;
    static const double coef[] = {0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                                  771.32342877765313,   -176.61502916214059,   12.507343278686905,
                                  -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    s -= 1.0;
    Complex x = coef[0];
    for (int i = 1; i < 9; ++i) x += coef[i] / (s + static_cast<double>(i));
    Complex t = s + g + 0.5;
    return std::sqrt(2 * pi) * std::pow(t, s + 0.5) * std::exp(-t) * x;
}

Complex hurwitz_zeta(Complex s, double alpha)
{
    if (s == Complex(1)) fail(ErrorCode::domain, "Hurwitz zeta has a pole at s = 1");
    if (!(alpha > 0)) fail(ErrorCode::domain, "Hurwitz shift must be positive");
    // Euler-Maclaurin with N direct terms and K correction terms
    const int N = 12, K = 18;
    Complex sum = 0;
    for (int n = 0; n < N; ++n) sum += std::exp(-s * std::log(n + alpha));
    const double x = N + alpha;
    const Complex xs = std::exp(-s * std::log(x));
    sum += x * xs / (s - 1.0) + 0.5 * xs;
    Complex rising = s;  // s (s+1) ... (s+2k-2)
    double xpow = 1.0 / x;
    for (int k = 1; k <= K; ++k) {
        double b = Rational(bernoulli_number(2 * k) / Rational(factorial(2 * k))).get_d();
        sum += b * rising * xs * xpow;
        rising *= (s + static_cast<double>(2 * k - 1)) * (s + static_cast<double>(2 * k));
        xpow /= x * x;
    }
    return sum;
}

Complex mellin_oracle(const LSeriesHandle& h, Complex s, int M, const MellinOptions& opt)
{
    if (is_nonpositive_integer(s)) fail(ErrorCode::domain, "Mellin oracle is not defined at non-positive integers");
    const auto& ex = h.expansion;
    const int step = ex.step;
    if (!(static_cast<double>(M) / step > -s.real()))
        fail(ErrorCode::domain, "subtraction order too small for this s");
    if (M > ex.order) fail(ErrorCode::missing_coefficient, "asymptotic coefficient " + std::to_string(M) + " not available");
    auto mu = [&](int m) { return static_cast<double>(m) / step; };
    for (auto& [m, c] : ex.coefficients)
        if (std::abs(s + mu(m)) < 1e-12 && std::abs(c) > 0)
            fail(ErrorCode::domain, "s sits on a pole of the continuation");

    TermTable table(h, opt.t0, opt.tol * 1e-4);
    auto subtracted = [&](double t) {
        Complex v = table.phi(t, opt.tol * 1e-4);
        for (auto& [m, c] : ex.coefficients)
            if (m <= M) v -= c * std::pow(t, mu(m));
        return v * std::exp((s - 1.0) * std::log(t));
    };
    auto near = integrate<Complex>(subtracted, opt.t0, 1.0, opt.tol);
    if (!near.converged) {
        std::ostringstream os;
        os << "quadrature on [t0, 1] failed; error estimate " << near.error;
        fail(ErrorCode::convergence, os.str());
    }
    Complex below = 0, polar = 0;
    for (auto& [m, c] : ex.coefficients) {
        if (c == Complex(0)) continue;
        if (m <= M) polar += c / (s + mu(m));
        else below += c * std::exp((s + mu(m)) * std::log(opt.t0)) / (s + mu(m));
    }
    Complex far = 0;
    if (h.decay > 0) {
        double T = 1.0 + 45.0 / h.decay;
        auto r = integrate<Complex>([&](double t) { return table.phi(t, opt.tol * 1e-4) * std::exp((s - 1.0) * std::log(t)); },
                                    1.0, T, opt.tol);
        if (!r.converged) {
            std::ostringstream os;
            os << "quadrature on [1, T] failed; error estimate " << r.error;
            fail(ErrorCode::convergence, os.str());
        }
        far = r.value;
    }
    return (below + near.value + polar + far) / complex_gamma(s) + exceptional_value(h, s);
}

Complex l_value(const LSeriesHandle& h, Complex s)
{
    if (h.reference) return h.reference(s);
    if (is_nonpositive_integer(s)) return continuation_value(h, static_cast<int>(-s.real())).value;
    const int step = h.expansion.step;
    // the expansions can be asymptotic only, so cut close to 0 and keep as few terms as the strip allows
    int M = std::min(std::max(0, static_cast<int>(std::floor(-s.real() * step)) + 1), h.expansion.order);
    return mellin_oracle(h, s, M, {1e-3, 1e-12});
}

}  // namespace qtl::lfunc
