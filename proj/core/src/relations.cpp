#include "qtl/bernoulli/relations.hpp"

#include <cmath>
#include <sstream>

#include "json.hpp"

namespace qtl::bernoulli {

using asymptotics::ExpPolynomialProbe;

double WeightForm::value(const std::vector<double>& x) const { return asymptotics::evaluate(w, x); }

Real WeightForm::value(const std::vector<Real>& x) const
{
    Real s = 0;
    for (auto& [e, c] : w) {
        Real term = to_real(c);
        for (int i = 0; i < dimension; ++i)
            for (int k = 0; k < e[i]; ++k) term *= x[i];
        s += term;
    }
    return s;
}

WeightForm make_weight_form(int n, Polynomial w)
{
    WeightForm f;
    f.dimension = n;
    std::vector<bool> seen(n, false);
    int degree = -1;
    for (auto& [e, c] : w) {
        if (static_cast<int>(e.size()) != n) fail(ErrorCode::invalid_input, "monomial has the wrong arity");
        if (c == 0) continue;
        if (c < 0) fail(ErrorCode::unsupported, "weight forms need non-negative coefficients");
        int d = 0;
        for (int i = 0; i < n; ++i) {
            if (e[i] < 0) fail(ErrorCode::invalid_input, "negative exponent in weight form");
            d += e[i];
            if (e[i] > 0) seen[i] = true;
        }
        if (degree >= 0 && d != degree) fail(ErrorCode::unsupported, "weight form must be homogeneous");
        degree = d;
        f.w[e] = c;
    }
    if (degree < 1) fail(ErrorCode::invalid_input, "weight form must have positive degree");
    for (int i = 0; i < n; ++i)
        if (!seen[i]) fail(ErrorCode::invalid_input, "weight form must involve every variable");
    f.degree = degree;
    return f;
}

namespace {

// F with machine-size data, for tight summation loops.
struct FastWeight {
    struct Term {
        double c;
        std::vector<unsigned> p;
        std::vector<long> a, k;
    };
    std::vector<Term> terms;

    explicit FastWeight(const WeightFunction& F)
    {
        for (auto& t : F.terms) {
            Term x{t.coefficient.get_d(), t.powers, {}, {}};
            for (int i = 0; i < F.dimension; ++i) {
                x.a.push_back(to_long(t.residues[i]));
                x.k.push_back(to_long(t.moduli[i]));
            }
            terms.push_back(std::move(x));
        }
    }

    double operator()(const std::vector<long>& l) const
    {
        double s = 0;
        for (auto& t : terms) {
            double mono = t.c;
            bool hit = true;
            for (size_t i = 0; i < l.size() && hit; ++i) {
                hit = t.k[i] == 0 ? l[i] == t.a[i] : (l[i] - t.a[i]) % t.k[i] == 0;
                if (hit && t.p[i]) mono *= std::pow(static_cast<double>(l[i]), t.p[i]);
            }
            if (hit) s += mono;
        }
        return s;
    }
};

std::string point_string(const std::vector<long>& l)
{
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < l.size(); ++i) os << (i ? "," : "") << l[i];
    os << ")";
    return os.str();
}

}  // namespace

void enumerate_points(const WeightFunction& F, const std::vector<Rational>& alpha, const WeightForm& w, double bound,
                      const std::function<void(const std::vector<long>&, double)>& visit)
{
    const int n = w.dimension;
    if (F.dimension != n || static_cast<int>(alpha.size()) != n) fail(ErrorCode::invalid_input, "dimension mismatch");
    std::vector<long> l(n);
    std::vector<double> x(n), lowest(n);
    for (int i = 0; i < n; ++i) {
        l[i] = to_long(F.offset[i]);
        lowest[i] = l[i] + alpha[i].get_d();
        if (lowest[i] < 0) fail(ErrorCode::unsupported, "the shifted cone must lie in the positive orthant");
        x[i] = lowest[i];
    }
    std::vector<std::pair<std::vector<int>, double>> monomials;
    for (auto& [e, c] : w.w) monomials.push_back({e, c.get_d()});
    auto value = [&] {
        double v = 0;
        for (auto& [e, c] : monomials) {
            double term = c;
            for (int k = 0; k < n; ++k)
                for (int p = 0; p < e[k]; ++p) term *= x[k];
            v += term;
        }
        return v;
    };
    const long cap = 10000000;
    std::function<void(int)> rec = [&](int i) {
        const long start = to_long(F.offset[i]);
        for (l[i] = start;; ++l[i]) {
            x[i] = l[i] + alpha[i].get_d();
            double v = value();
            if (i + 1 == n && v <= 0)
                fail(ErrorCode::positivity, "weight form vanishes or is negative at lattice point " + point_string(l));
            if (v > bound) break;
            if (l[i] - start > cap) fail(ErrorCode::enumeration, "weight form does not grow along an axis");
            if (i + 1 == n) visit(l, v);
            else rec(i + 1);
        }
        x[i] = lowest[i];
    };
    rec(0);
}

Complex multi_l_direct(const WeightFunction& F, const std::vector<Rational>& alpha, const std::vector<Complex>& s)
{
    const int n = F.dimension;
    if (static_cast<int>(alpha.size()) != n || static_cast<int>(s.size()) != n)
        fail(ErrorCode::invalid_input, "dimension mismatch");
    Complex total = 0;
    for (auto& t : F.terms) {
        Complex prod = t.coefficient.get_d();
        for (int i = 0; i < n && prod != Complex(0); ++i) {
            const unsigned j = t.powers[i];
            const double a = alpha[i].get_d();
            if (t.moduli[i] == 0) {
                if (t.residues[i] < F.offset[i]) {
                    prod = 0;
                    break;
                }
                double y = t.residues[i].get_d();
                if (y + a <= 0) fail(ErrorCode::domain, "shifted point is not positive");
                prod *= std::pow(y, j) * std::exp(-s[i] * std::log(y + a));
                continue;
            }
            if (!(s[i].real() > j + 1.0)) fail(ErrorCode::domain, "Re(s_i) too small for absolute convergence");
            const Integer k = t.moduli[i];
            Integer y0 = t.residues[i] + k * ceil(Rational(F.offset[i] - t.residues[i], k));
            const double kd = k.get_d(), shift = (y0.get_d() + a) / kd;
            if (shift <= 0) fail(ErrorCode::domain, "shifted progression is not positive");
            // y^j = sum_r C(j,r) (y + a)^r (-a)^{j-r}; sum over y = y0 + k q of (y + a)^{r-s}
            Complex factor = 0;
            for (unsigned r = 0; r <= j; ++r) {
                Complex sr = s[i] - static_cast<double>(r);
                factor += binomial(j, r).get_d() * std::pow(-a, j - r) * std::exp(-sr * std::log(kd)) *
                          lfunc::hurwitz_zeta(sr, shift);
            }
            prod *= factor;
        }
        total += prod;
    }
    return total;
}

Rational multi_residue(const WeightFunction& F, const std::vector<Rational>& alpha, const MultiIndex& m)
{
    auto lo = asymptotics::phi_lower_degrees(F);
    if (static_cast<int>(m.size()) != F.dimension) fail(ErrorCode::invalid_input, "multi-index has the wrong arity");
    MultiIndex hi(m.size());
    int total = 0;
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] < lo[i]) fail(ErrorCode::domain, "multi-index below the Laurent range");
        hi[i] = m[i];
        total += m[i];
    }
    Rational b = asymptotics::phi_series(F, alpha, hi).coeff(m);
    return total % 2 ? Rational(-b) : b;
}

lfunc::LSeriesHandle weighted_handle(const WeightFunction& F, const std::vector<Rational>& alpha, const WeightForm& w,
                                     int order)
{
    lfunc::LSeriesHandle h;
    auto fast = std::make_shared<FastWeight>(F);
    h.terms = [F, alpha, w, fast](double lo, double hi, const lfunc::TermSink& sink) {
        enumerate_points(F, alpha, w, hi, [&](const std::vector<long>& l, double v) {
            if (v <= lo) return;
            double a = (*fast)(l);
            if (a != 0) sink({a, v});
        });
    };
    double decay = std::numeric_limits<double>::infinity();
    for (double bound = 1; !std::isfinite(decay) && bound < 1e12; bound *= 4)
        enumerate_points(F, alpha, w, bound, [&](const std::vector<long>&, double v) { decay = std::min(decay, v); });
    h.decay = decay;
    ExpPolynomialProbe probe(w.dimension, w.w);
    h.expansion = asymptotics::asymptotic_coefficients(F, alpha, probe, order);
    h.expansion.step = w.degree;
    h.expansion.variable = "t";
    return h;
}

Complex weighted_l(const WeightFunction& F, const std::vector<Rational>& alpha, const WeightForm& w, Complex s, double tol)
{
    auto h = weighted_handle(F, alpha, w, 0);
    return lfunc::l_direct(h, s, tol);
}

double weighted_residue(const WeightFunction& F, const std::vector<Rational>& alpha, const WeightForm& w, int M)
{
    const int n = F.dimension;
    auto lo = asymptotics::phi_lower_degrees(F);
    auto hi = asymptotics::required_orders(lo, M);
    auto phi = asymptotics::phi_series(F, alpha, hi);
    ExpPolynomialProbe probe(n, w.w);
    double sum = 0;
    MultiIndex m(n);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i + 1 == n) {
            if (left < lo[i] || left > hi[i]) return;
            m[i] = left;
            Rational b = phi.coeff(m);
            if (b == 0) return;
            // iterated residue = (-1)^{|m|} b, so the signs cancel against (-1)^{|m|}
            Rational residue = M % 2 ? Rational(-b) : b;
            double sign = M % 2 ? -1.0 : 1.0;
            sum += sign * probe.derivative(m) * residue.get_d();
            return;
        }
        for (int v = lo[i]; v <= hi[i]; ++v) {
            m[i] = v;
            rec(i + 1, left - v);
        }
    };
    rec(0, M);
    return sum;
}

std::map<int, Real> theta_fit(const WeightFunction& F, const std::vector<Rational>& alpha, const WeightForm& w,
                              const FitOptions& opt)
{
    const int n = F.dimension;
    const int K = opt.nodes;
    double u_hi = opt.u_hi, u_lo = opt.u_lo;
    if (u_hi <= 0) {
        u_hi = w.degree == 1 ? 1.0 : w.degree == 2 ? 0.3 : w.degree == 3 ? 0.15 : 0.1;
        u_lo = u_hi / 4;
    }
    if (!(u_lo > 0 && u_lo < u_hi) || K < 2) fail(ErrorCode::invalid_input, "bad fit window");
    auto lo = asymptotics::phi_lower_degrees(F);
    int L = 0;
    for (int x : lo) L -= x;
    FastWeight fast(F);
    std::vector<Real> a(n);
    for (int i = 0; i < n; ++i) a[i] = to_real(alpha[i]);

    // rows: u_j^L Theta(u_j) = sum_{q < K} c_{q-L} u_j^q
    std::vector<std::vector<Real>> A(K, std::vector<Real>(K + 1));
    for (int j = 0; j < K; ++j) {
        double ud = u_lo + (u_hi - u_lo) * (1 + std::cos(pi * (j + 0.5) / K)) / 2;
        Real u(ud);
        Real theta = 0;
        std::vector<Real> x(n);
        enumerate_points(F, alpha, w, 130.0 / std::pow(ud, w.degree), [&](const std::vector<long>& l, double) {
            double c = fast(l);
            if (c == 0) return;
            for (int i = 0; i < n; ++i) x[i] = u * (Real(l[i]) + a[i]);
            theta += Real(c) * exp(-w.value(x));
        });
        Real p = 1;
        for (int q = 0; q < K; ++q) {
            A[j][q] = p;
            p *= u;
        }
        A[j][K] = pow(u, L) * theta;
    }
    for (int c = 0; c < K; ++c) {
        int piv = c;
        for (int r = c + 1; r < K; ++r)
            if (abs(A[r][c]) > abs(A[piv][c])) piv = r;
        std::swap(A[c], A[piv]);
        for (int r = 0; r < K; ++r) {
            if (r == c) continue;
            Real f = A[r][c] / A[c][c];
            for (int q = c; q <= K; ++q) A[r][q] -= f * A[c][q];
        }
    }
    std::map<int, Real> out;
    for (int q = 0; q < K; ++q) out[q - L] = A[q][K] / A[q][q];
    return out;
}

std::string RelationReport::to_json() const
{
    nlohmann::ordered_json j;
    j["M"] = M;
    j["lhs"] = {lhs.real(), lhs.imag()};
    j["rhs"] = {rhs.real(), rhs.imag()};
    j["abs_diff"] = abs_diff;
    return j.dump();
}

RelationReport relation_check(const WeightFunction& F, const std::vector<Rational>& alpha, const WeightForm& w, int M,
                              const FitOptions& opt)
{
    RelationReport r;
    r.M = M;
    auto fit = theta_fit(F, alpha, w, opt);
    auto it = fit.find(M);
    r.lhs = it == fit.end() ? 0.0 : it->second.convert_to<double>();
    r.rhs = weighted_residue(F, alpha, w, M);
    r.abs_diff = std::abs(r.lhs - r.rhs);
    return r;
}

}  // namespace qtl::bernoulli
