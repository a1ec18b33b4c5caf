#include "qtl/core/matrix.hpp"

#include <utility>

namespace qtl {

RatMatrix to_rational(const IntMatrix& a)
{
    RatMatrix r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r(i, j) = Rational(a(i, j));
    return r;
}

bool is_diagonal(const IntMatrix& a)
{
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (i != j && a(i, j) != 0) return false;
    return true;
}

bool is_symmetric(const IntMatrix& a)
{
    if (!a.square()) return false;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = i + 1; j < a.cols(); ++j)
            if (a(i, j) != a(j, i)) return false;
    return true;
}

Integer determinant(const IntMatrix& a)
{
    if (!a.square()) fail(ErrorCode::invalid_input, "determinant of a non-square matrix");
    const int n = a.rows();
    if (n == 0) return 1;
    // fraction-free Bareiss elimination
    IntMatrix m = a;
    Integer prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m(k, k) == 0) {
            int p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            for (int j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

RatMatrix inverse(const RatMatrix& a)
{
    if (!a.square()) fail(ErrorCode::invalid_input, "inverse of a non-square matrix");
    const int n = a.rows();
    RatMatrix m = a;
    RatMatrix inv = RatMatrix::identity(n);
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && m(p, c) == 0) ++p;
        if (p == n) fail(ErrorCode::singular_matrix, "matrix is singular");
        if (p != c)
            for (int j = 0; j < n; ++j) {
                std::swap(m(p, j), m(c, j));
                std::swap(inv(p, j), inv(c, j));
            }
        Rational piv = m(c, c);
        for (int j = 0; j < n; ++j) {
            m(c, j) /= piv;
            inv(c, j) /= piv;
        }
        for (int i = 0; i < n; ++i) {
            if (i == c || m(i, c) == 0) continue;
            Rational f = m(i, c);
            for (int j = 0; j < n; ++j) {
                m(i, j) -= f * m(c, j);
                inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

RatMatrix inverse(const IntMatrix& a) { return inverse(to_rational(a)); }

namespace {

void swap_rows(IntMatrix& m, int a, int b)
{
    for (int j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}
void swap_cols(IntMatrix& m, int a, int b)
{
    for (int i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}
// row_dst -= q * row_src
void row_axpy(IntMatrix& m, int dst, int src, const Integer& q)
{
    for (int j = 0; j < m.cols(); ++j) m(dst, j) -= q * m(src, j);
}
void col_axpy(IntMatrix& m, int dst, int src, const Integer& q)
{
    for (int i = 0; i < m.rows(); ++i) m(i, dst) -= q * m(i, src);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a)
{
    if (!a.square()) fail(ErrorCode::invalid_input, "Smith form expects a square matrix");
    const int n = a.rows();
    IntMatrix d = a;
    IntMatrix u = IntMatrix::identity(n);
    IntMatrix v = IntMatrix::identity(n);

    for (int t = 0; t < n; ++t) {
        for (;;) {
            int pi = -1, pj = -1;
            for (int i = t; i < n; ++i)
                for (int j = t; j < n; ++j)
                    if (d(i, j) != 0 && (pi < 0 || abs(d(i, j)) < abs(d(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
            if (pi < 0) fail(ErrorCode::singular_matrix, "Smith form of a singular matrix");
            if (pi != t) {
                swap_rows(d, pi, t);
                swap_rows(u, pi, t);
            }
            if (pj != t) {
                swap_cols(d, pj, t);
                swap_cols(v, pj, t);
            }

            bool clean = true;
            for (int i = t + 1; i < n; ++i) {
                if (d(i, t) == 0) continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
                row_axpy(d, i, t, q);
                row_axpy(u, i, t, q);
                if (d(i, t) != 0) clean = false;
            }
            for (int j = t + 1; j < n; ++j) {
                if (d(t, j) == 0) continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
                col_axpy(d, j, t, q);
                col_axpy(v, j, t, q);
                if (d(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // enforce d_t | every remaining entry
            int bad = -1;
            for (int i = t + 1; i < n && bad < 0; ++i)
                for (int j = t + 1; j < n; ++j)
                    if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
                        bad = i;
                        break;
                    }
            if (bad < 0) break;
            row_axpy(d, t, bad, Integer(-1));
            row_axpy(u, t, bad, Integer(-1));
        }
        if (d(t, t) < 0) {
            for (int j = 0; j < n; ++j) {
                d(t, j) = -d(t, j);
                u(t, j) = -u(t, j);
            }
        }
    }
    return {std::move(u), std::move(d), std::move(v)};
}

std::vector<Integer> leading_minors(const IntMatrix& a)
{
    std::vector<Integer> out;
    for (int k = 1; k <= a.rows(); ++k) {
        IntMatrix s(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) s(i, j) = a(i, j);
        out.push_back(determinant(s));
    }
    return out;
}

int failing_minor_index(const IntMatrix& a)
{
    if (!is_symmetric(a)) fail(ErrorCode::non_symmetric, "definiteness test requires a symmetric matrix");
    auto minors = leading_minors(a);
    for (size_t k = 0; k < minors.size(); ++k) {
        int want = (k % 2 == 0) ? -1 : 1;  // (-1)^{k+1} with k 0-based
        if (want * sgn(minors[k]) <= 0) return static_cast<int>(k) + 1;
    }
    return 0;
}

bool is_negative_definite(const IntMatrix& a) { return a.rows() > 0 && failing_minor_index(a) == 0; }

LdlFactor ldl_decompose(const RatMatrix& a)
{
    const int n = a.rows();
    LdlFactor f{RatMatrix::identity(n), std::vector<Rational>(n)};
    for (int j = 0; j < n; ++j) {
        Rational s = a(j, j);
        for (int k = 0; k < j; ++k) s -= f.L(j, k) * f.L(j, k) * f.d[k];
        if (s <= 0) fail(ErrorCode::not_negative_definite, "quadratic form is not positive definite");
        f.d[j] = s;
        for (int i = j + 1; i < n; ++i) {
            Rational t = a(i, j);
            for (int k = 0; k < j; ++k) t -= f.L(i, k) * f.L(j, k) * f.d[k];
            f.L(i, j) = t / s;
        }
    }
    return f;
}

Rational quadratic_form(const RatMatrix& a, const std::vector<Rational>& x)
{
    Rational s = 0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) s += x[i] * a(i, j) * x[j];
    return s;
}

IntegerMatrixData::IntegerMatrixData(IntMatrix a) : a_(std::move(a))
{
    det_ = qtl::determinant(a_);
    if (det_ == 0) fail(ErrorCode::singular_matrix, "matrix is singular");
    inv_ = qtl::inverse(a_);
    snf_ = smith_normal_form(a_);
}

}  // namespace qtl
