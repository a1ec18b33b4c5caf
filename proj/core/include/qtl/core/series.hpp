#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "qtl/core/error.hpp"
#include "qtl/core/rational.hpp"

namespace qtl {

using MultiIndex = std::vector<int>;

// Multivariate Laurent series in t_1..t_N known exactly for lo_i <= deg_i <= hi_i.
// Stored densely on the box; coefficients beyond hi are unknown, not zero.
template <class T>
class TruncatedLaurent {
public:
    TruncatedLaurent() = default;
    TruncatedLaurent(MultiIndex lo, MultiIndex hi) : lo_(std::move(lo)), hi_(std::move(hi))
    {
        if (lo_.size() != hi_.size()) fail(ErrorCode::truncation_mismatch, "degree vectors differ in length");
        size_t total = 1;
        stride_.assign(lo_.size(), 0);
        for (size_t i = lo_.size(); i-- > 0;) {
            stride_[i] = total;
            int w = std::max(0, hi_[i] - lo_[i] + 1);
            total *= static_cast<size_t>(w);
        }
        data_.assign(total, T(0));
    }

    static TruncatedLaurent constant(int n, const T& c, const MultiIndex& hi)
    {
        TruncatedLaurent s(MultiIndex(n, 0), hi);
        if (s.in_box(MultiIndex(n, 0))) s.at(MultiIndex(n, 0)) = c;
        return s;
    }
    static TruncatedLaurent variable(int n, int i, const MultiIndex& hi)
    {
        TruncatedLaurent s(MultiIndex(n, 0), hi);
        MultiIndex m(n, 0);
        m[i] = 1;
        if (s.in_box(m)) s.at(m) = T(1);
        return s;
    }

    int vars() const { return static_cast<int>(lo_.size()); }
    const MultiIndex& lo() const { return lo_; }
    const MultiIndex& hi() const { return hi_; }
    bool empty() const { return data_.empty(); }

    bool in_box(const MultiIndex& m) const
    {
        for (size_t i = 0; i < lo_.size(); ++i)
            if (m[i] < lo_[i] || m[i] > hi_[i]) return false;
        return true;
    }

    // Zero below the minimum degree; asking above the truncation order is an error.
    T coeff(const MultiIndex& m) const
    {
        check_arity(m);
        for (size_t i = 0; i < lo_.size(); ++i)
            if (m[i] > hi_[i])
                fail(ErrorCode::truncation_mismatch, "coefficient requested beyond truncation order");
        for (size_t i = 0; i < lo_.size(); ++i)
            if (m[i] < lo_[i]) return T(0);
        return data_[offset(m)];
    }
    T& at(const MultiIndex& m)
    {
        check_arity(m);
        if (!in_box(m)) fail(ErrorCode::truncation_mismatch, "index outside the stored degree box");
        return data_[offset(m)];
    }

    void for_each(const std::function<void(const MultiIndex&, const T&)>& fn) const
    {
        if (data_.empty()) return;
        MultiIndex m = lo_;
        for (size_t k = 0; k < data_.size(); ++k) {
            fn(m, data_[k]);
            advance(m);
        }
    }

    TruncatedLaurent operator-() const
    {
        TruncatedLaurent r = *this;
        for (auto& c : r.data_) c = -c;
        return r;
    }
    TruncatedLaurent& operator*=(const T& c)
    {
        for (auto& x : data_) x *= c;
        return *this;
    }
    friend TruncatedLaurent operator*(TruncatedLaurent a, const T& c) { return a *= c; }

    friend TruncatedLaurent operator+(const TruncatedLaurent& a, const TruncatedLaurent& b) { return a.combine(b, 1); }
    friend TruncatedLaurent operator-(const TruncatedLaurent& a, const TruncatedLaurent& b) { return a.combine(b, -1); }

    friend TruncatedLaurent operator*(const TruncatedLaurent& a, const TruncatedLaurent& b)
    {
        if (a.vars() != b.vars()) fail(ErrorCode::truncation_mismatch, "series have different variable counts");
        const int n = a.vars();
        MultiIndex lo(n), hi(n);
        for (int i = 0; i < n; ++i) {
            lo[i] = a.lo_[i] + b.lo_[i];
            hi[i] = std::min(a.hi_[i] + b.lo_[i], b.hi_[i] + a.lo_[i]);
        }
        TruncatedLaurent r(lo, hi);
        if (r.data_.empty()) return r;
        MultiIndex s(n);
        a.for_each([&](const MultiIndex& ma, const T& ca) {
            if (ca == T(0)) return;
            b.for_each([&](const MultiIndex& mb, const T& cb) {
                for (int i = 0; i < n; ++i) {
                    s[i] = ma[i] + mb[i];
                    if (s[i] > hi[i]) return;
                }
                r.data_[r.offset(s)] += ca * cb;
            });
        });
        return r;
    }

    // Drop everything above hi (componentwise); hi must not exceed the current order.
    TruncatedLaurent truncate(const MultiIndex& hi) const
    {
        check_arity(hi);
        for (size_t i = 0; i < hi.size(); ++i)
            if (hi[i] > hi_[i]) fail(ErrorCode::truncation_mismatch, "cannot raise truncation order");
        TruncatedLaurent r(lo_, hi);
        for_each([&](const MultiIndex& m, const T& c) {
            if (r.in_box(m)) r.at(m) = c;
        });
        return r;
    }

private:
    MultiIndex lo_, hi_;
    std::vector<size_t> stride_;
    std::vector<T> data_;

    void check_arity(const MultiIndex& m) const
    {
        if (m.size() != lo_.size()) fail(ErrorCode::truncation_mismatch, "multi-index has the wrong length");
    }
    size_t offset(const MultiIndex& m) const
    {
        size_t o = 0;
        for (size_t i = 0; i < lo_.size(); ++i) o += stride_[i] * static_cast<size_t>(m[i] - lo_[i]);
        return o;
    }
    void advance(MultiIndex& m) const
    {
        for (size_t i = m.size(); i-- > 0;) {
            if (++m[i] <= hi_[i]) return;
            m[i] = lo_[i];
        }
    }
    TruncatedLaurent combine(const TruncatedLaurent& b, int sign) const
    {
        if (vars() != b.vars()) fail(ErrorCode::truncation_mismatch, "series have different variable counts");
        if (hi_ != b.hi_) fail(ErrorCode::truncation_mismatch, "series have different truncation orders");
        MultiIndex lo(lo_.size());
        for (size_t i = 0; i < lo.size(); ++i) lo[i] = std::min(lo_[i], b.lo_[i]);
        TruncatedLaurent r(lo, hi_);
        for_each([&](const MultiIndex& m, const T& c) { r.at(m) += c; });
        b.for_each([&](const MultiIndex& m, const T& c) {
            if (sign > 0) r.at(m) += c;
            else r.at(m) -= c;
        });
        return r;
    }
};

// exp(a); a must have no negative-degree part. A nonzero constant term is only allowed
// when T can exponentiate it (floating types); exact series require it to vanish.
template <class T>
TruncatedLaurent<T> series_exp(const TruncatedLaurent<T>& a, const T& exp_of_constant)
{
    const int n = a.vars();
    for (int i = 0; i < n; ++i)
        if (a.lo()[i] < 0) fail(ErrorCode::domain, "exp of a series with negative-degree terms");
    TruncatedLaurent<T> base(MultiIndex(n, 0), a.hi());
    MultiIndex zero(n, 0);
    a.for_each([&](const MultiIndex& m, const T& c) {
        if (m != zero) base.at(m) = c;
    });
    int order = 0;
    for (int i = 0; i < n; ++i) order += std::max(0, a.hi()[i]);
    TruncatedLaurent<T> result = TruncatedLaurent<T>::constant(n, T(1), a.hi());
    TruncatedLaurent<T> term = result;
    for (int j = 1; j <= order; ++j) {
        term = (term * base).truncate(a.hi());
        term *= T(1) / T(j);
        result = result + term;
    }
    return result * exp_of_constant;
}

inline TruncatedLaurent<Rational> series_exp(const TruncatedLaurent<Rational>& a)
{
    const int n = a.vars();
    if (a.in_box(MultiIndex(n, 0)) && a.coeff(MultiIndex(n, 0)) != 0)
        fail(ErrorCode::domain, "exact exp needs a vanishing constant term");
    return series_exp(a, Rational(1));
}

template <class T>
TruncatedLaurent<T> series_mul(const TruncatedLaurent<T>& a, const TruncatedLaurent<T>& b)
{
    return a * b;
}

// d/dt_var
template <class T>
TruncatedLaurent<T> series_derive(const TruncatedLaurent<T>& a, int var)
{
    MultiIndex lo = a.lo(), hi = a.hi();
    hi[var] -= 1;
    lo[var] = a.lo()[var] >= 0 ? std::max(0, a.lo()[var] - 1) : a.lo()[var] - 1;
    TruncatedLaurent<T> r(lo, hi);
    a.for_each([&](const MultiIndex& m, const T& c) {
        if (m[var] == 0) return;
        MultiIndex d = m;
        d[var] -= 1;
        if (r.in_box(d)) r.at(d) += c * T(m[var]);
    });
    return r;
}

// 1/a for a univariate series with a nonzero leading coefficient.
template <class T>
TruncatedLaurent<T> series_inverse(const TruncatedLaurent<T>& a)
{
    if (a.vars() != 1) fail(ErrorCode::domain, "series inverse is univariate only");
    int v = a.lo()[0];
    while (v <= a.hi()[0] && a.coeff({v}) == T(0)) ++v;
    if (v > a.hi()[0]) fail(ErrorCode::domain, "inverse of a series with no known nonzero term");
    const int prec = a.hi()[0] - v;
    TruncatedLaurent<T> r({-v}, {-v + prec});
    const T lead = a.coeff({v});
    for (int j = 0; j <= prec; ++j) {
        T s = (j == 0) ? T(1) : T(0);
        for (int i = 1; i <= j; ++i) s -= a.coeff({v + i}) * r.coeff({-v + j - i});
        r.at({-v + j}) = s / lead;
    }
    return r;
}

// Product of independent univariate series, series i placed in variable i.
template <class T>
TruncatedLaurent<T> outer_product(const std::vector<TruncatedLaurent<T>>& factors)
{
    const int n = static_cast<int>(factors.size());
    MultiIndex lo(n), hi(n);
    for (int i = 0; i < n; ++i) {
        if (factors[i].vars() != 1) fail(ErrorCode::truncation_mismatch, "outer product expects univariate factors");
        lo[i] = factors[i].lo()[0];
        hi[i] = factors[i].hi()[0];
    }
    TruncatedLaurent<T> r(lo, hi);
    if (r.empty()) return r;
    MultiIndex m = lo;
    std::function<void(int, T)> rec = [&](int i, T acc) {
        if (i == n) {
            r.at(m) = acc;
            return;
        }
        for (int d = lo[i]; d <= hi[i]; ++d) {
            m[i] = d;
            rec(i + 1, acc * factors[i].coeff({d}));
        }
    };
    rec(0, T(1));
    return r;
}

}  // namespace qtl
