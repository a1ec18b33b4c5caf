#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace qtl {

template <class V>
struct QuadratureResult {
    V value{};
    double error = 0;
    int evaluations = 0;
    bool converged = false;
};

namespace detail {

// 7-point Gauss / 15-point Kronrod nodes on [-1,1] (non-negative half).
inline constexpr std::array<double, 8> kronrod_x = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kronrod_w = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> gauss_w = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class V>
struct Panel {
    double a, b;
    V value;
    double error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

template <class V, class F>
Panel<V> gk15(F& f, double a, double b)
{
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    V fc = f(c);
    V k = fc * kronrod_w[7];
    V g = fc * gauss_w[3];
    for (int i = 0; i < 7; ++i) {
        double dx = h * kronrod_x[i];
        V s = f(c - dx) + f(c + dx);
        k += s * kronrod_w[i];
        if (i % 2 == 1) g += s * gauss_w[i / 2];
    }
    k *= h;
    g *= h;
    double err = std::abs(k - g);
    return {a, b, k, err};
}

}  // namespace detail

// Globally adaptive Gauss-Kronrod on a finite interval.
template <class V, class F>
QuadratureResult<V> integrate(F f, double a, double b, double abs_tol, double rel_tol = 0.0, int max_panels = 4000)
{
    std::priority_queue<detail::Panel<V>> heap;
    auto first = detail::gk15<V>(f, a, b);
    heap.push(first);
    V total = first.value;
    double err = first.error;
    int evals = 15;
    int panels = 1;
    while (err > std::max(abs_tol, rel_tol * std::abs(total)) && panels < max_panels) {
        auto p = heap.top();
        heap.pop();
        double mid = 0.5 * (p.a + p.b);
        if (!(mid > p.a && mid < p.b)) {
            heap.push(p);
            break;
        }
        auto l = detail::gk15<V>(f, p.a, mid);
        auto r = detail::gk15<V>(f, mid, p.b);
        evals += 30;
        ++panels;
        total += l.value + r.value - p.value;
        err += l.error + r.error - p.error;
        heap.push(l);
        heap.push(r);
    }
    // re-sum to avoid drift from the incremental updates
    V sum{};
    double esum = 0;
    while (!heap.empty()) {
        sum += heap.top().value;
        esum += heap.top().error;
        heap.pop();
    }
    QuadratureResult<V> out;
    out.value = sum;
    out.error = esum;
    out.evaluations = evals;
    out.converged = esum <= std::max(abs_tol, rel_tol * std::abs(sum)) * 1.0000001;
    return out;
}

// Integral over [a, inf) through x = a + u/(1-u).
template <class V, class F>
QuadratureResult<V> integrate_to_infinity(F f, double a, double abs_tol, double rel_tol = 0.0, int max_panels = 4000)
{
    auto g = [&](double u) -> V {
        if (u >= 1.0) return V{};
        double w = 1.0 - u;
        double x = a + u / w;
        V v = f(x);
        if (!std::isfinite(std::abs(v))) return V{};
        return v * (1.0 / (w * w));
    };
    return integrate<V>(g, 0.0, 1.0, abs_tol, rel_tol, max_panels);
}

}  // namespace qtl
