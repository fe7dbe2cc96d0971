#include "kucalc/zlinalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace kucalc {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw std::invalid_argument("ragged matrix literal");
        for (long x : r)
            data_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

IntMatrix IntMatrix::hconcat(const IntMatrix& other) const
{
    if (rows_ != other.rows_)
        throw std::invalid_argument("hconcat: row counts differ");
    IntMatrix m(rows_, cols_ + other.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c)
            m(r, c) = (*this)(r, c);
        for (std::size_t c = 0; c < other.cols_; ++c)
            m(r, cols_ + c) = other(r, c);
    }
    return m;
}

IntVector IntMatrix::column(std::size_t c) const
{
    IntVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("matrix product: dimension mismatch");
    IntMatrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const BigInt& x = a(i, k);
            if (sgn(x) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (sgn(b(k, j)) != 0)
                    m(i, j) += x * b(k, j);
        }
    return m;
}

IntVector operator*(const IntMatrix& a, const IntVector& x)
{
    if (a.cols_ != x.size())
        throw std::invalid_argument("matrix-vector product: dimension mismatch");
    IntVector y(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k)
            if (sgn(x[k]) != 0)
                y[i] += a(i, k) * x[k];
    return y;
}

BigInt determinant(const IntMatrix& a)
{
    if (a.rows() != a.cols())
        throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0)
        return 1;
    IntMatrix m = a;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(m(k, k)) == 0) {
            std::size_t r = k + 1;
            while (r < n && sgn(m(r, k)) == 0)
                ++r;
            if (r == n)
                return 0;
            for (std::size_t c = 0; c < n; ++c)
                std::swap(m(k, c), m(r, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt x = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = std::move(x);
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

namespace {

// Nearest-integer quotient, so the remainder has |r| <= |b|/2.
BigInt round_div(const BigInt& a, const BigInt& b)
{
    BigInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    // r has the sign of b; stepping q up moves r by -b toward zero.
    BigInt r2 = 2 * abs(r);
    if (r2 > abs(b))
        q += 1;
    return q;
}

class SmithWorker {
public:
    SmithWorker(const IntMatrix& a, bool track)
        : m_(a), rows_(a.rows()), cols_(a.cols()), track_(track)
    {
        if (track_) {
            u_ = IntMatrix::identity(rows_);
            v_ = IntMatrix::identity(cols_);
        }
    }

    SmithForm run()
    {
        const std::size_t r = std::min(rows_, cols_);
        std::size_t t = 0;
        for (; t < r; ++t) {
            if (!settle(t))
                break;
        }
        SmithForm out;
        out.rank = t;
        out.diagonal.assign(r, BigInt(0));
        for (std::size_t k = 0; k < t; ++k)
            out.diagonal[k] = m_(k, k);
        if (track_) {
            out.U = std::move(u_);
            out.V = std::move(v_);
        }
        return out;
    }

private:
    // Brings a nonzero pivot to (t,t) that divides the remaining block.
    bool settle(std::size_t t)
    {
        for (;;) {
            if (!move_min_to(t))
                return false;
            bool clean = true;
            for (std::size_t i = t + 1; i < rows_; ++i) {
                if (sgn(m_(i, t)) == 0)
                    continue;
                row_addmul(i, t, -round_div(m_(i, t), m_(t, t)));
                if (sgn(m_(i, t)) != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < cols_; ++j) {
                if (sgn(m_(t, j)) == 0)
                    continue;
                col_addmul(j, t, -round_div(m_(t, j), m_(t, t)));
                if (sgn(m_(t, j)) != 0)
                    clean = false;
            }
            if (!clean)
                continue;
            if (auto bad = non_divisible(t)) {
                row_addmul(t, *bad, BigInt(1));
                continue;
            }
            if (sgn(m_(t, t)) < 0)
                negate_row(t);
            return true;
        }
    }

    bool move_min_to(std::size_t t)
    {
        std::size_t br = rows_, bc = cols_;
        BigInt best;
        for (std::size_t i = t; i < rows_; ++i)
            for (std::size_t j = t; j < cols_; ++j) {
                const BigInt& x = m_(i, j);
                if (sgn(x) == 0)
                    continue;
                if (br == rows_ || mpz_cmpabs(x.get_mpz_t(), best.get_mpz_t()) < 0) {
                    best = x;
                    br = i;
                    bc = j;
                    if (best == 1 || best == -1)
                        goto found;
                }
            }
        if (br == rows_)
            return false;
    found:
        swap_rows(t, br);
        swap_cols(t, bc);
        return true;
    }

    std::optional<std::size_t> non_divisible(std::size_t t) const
    {
        const BigInt& d = m_(t, t);
        if (d == 1 || d == -1)
            return std::nullopt;
        for (std::size_t i = t + 1; i < rows_; ++i)
            for (std::size_t j = t + 1; j < cols_; ++j)
                if (!mpz_divisible_p(m_(i, j).get_mpz_t(), d.get_mpz_t()))
                    return i;
        return std::nullopt;
    }

    // row_dst += f * row_src
    void row_addmul(std::size_t dst, std::size_t src, const BigInt& f)
    {
        for (std::size_t c = 0; c < cols_; ++c)
            if (sgn(m_(src, c)) != 0)
                mpz_addmul(m_(dst, c).get_mpz_t(), f.get_mpz_t(), m_(src, c).get_mpz_t());
        if (track_)
            for (std::size_t c = 0; c < rows_; ++c)
                if (sgn(u_(src, c)) != 0)
                    mpz_addmul(u_(dst, c).get_mpz_t(), f.get_mpz_t(), u_(src, c).get_mpz_t());
    }

    // col_dst += f * col_src
    void col_addmul(std::size_t dst, std::size_t src, const BigInt& f)
    {
        for (std::size_t r = 0; r < rows_; ++r)
            if (sgn(m_(r, src)) != 0)
                mpz_addmul(m_(r, dst).get_mpz_t(), f.get_mpz_t(), m_(r, src).get_mpz_t());
        if (track_)
            for (std::size_t r = 0; r < cols_; ++r)
                if (sgn(v_(r, src)) != 0)
                    mpz_addmul(v_(r, dst).get_mpz_t(), f.get_mpz_t(), v_(r, src).get_mpz_t());
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t c = 0; c < cols_; ++c)
            mpz_swap(m_(a, c).get_mpz_t(), m_(b, c).get_mpz_t());
        if (track_)
            for (std::size_t c = 0; c < rows_; ++c)
                mpz_swap(u_(a, c).get_mpz_t(), u_(b, c).get_mpz_t());
    }

    void swap_cols(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t r = 0; r < rows_; ++r)
            mpz_swap(m_(r, a).get_mpz_t(), m_(r, b).get_mpz_t());
        if (track_)
            for (std::size_t r = 0; r < cols_; ++r)
                mpz_swap(v_(r, a).get_mpz_t(), v_(r, b).get_mpz_t());
    }

    void negate_row(std::size_t r)
    {
        for (std::size_t c = 0; c < cols_; ++c)
            mpz_neg(m_(r, c).get_mpz_t(), m_(r, c).get_mpz_t());
        if (track_)
            for (std::size_t c = 0; c < rows_; ++c)
                mpz_neg(u_(r, c).get_mpz_t(), u_(r, c).get_mpz_t());
    }

    IntMatrix m_;
    std::size_t rows_;
    std::size_t cols_;
    bool track_;
    IntMatrix u_;
    IntMatrix v_;
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a, bool with_transforms)
{
    return SmithWorker(a, with_transforms).run();
}

PLocalSolver::PLocalSolver(const IntMatrix& a, std::uint64_t p)
    : p_(p), rows_(a.rows()), snf_(smith_normal_form(a, true))
{
}

std::optional<std::vector<PLocalScalar>> PLocalSolver::solve(const IntVector& b) const
{
    if (b.size() != rows_)
        throw std::invalid_argument("solve_plocal: right-hand side has length " +
                                    std::to_string(b.size()) + ", expected " +
                                    std::to_string(rows_));
    const IntVector ub = snf_.U * b;
    const std::size_t cols = snf_.V.rows();
    std::vector<PLocalScalar> y(cols);
    for (std::size_t i = 0; i < ub.size(); ++i) {
        if (i >= snf_.rank) {
            if (sgn(ub[i]) != 0)
                return std::nullopt;
            continue;
        }
        const BigInt& d = snf_.diagonal[i];
        if (sgn(ub[i]) == 0)
            continue;
        if (vp(ub[i], p_) < vp(d, p_))
            return std::nullopt;
        y[i] = PLocalScalar::fraction(ub[i], d, p_);
    }
    std::vector<PLocalScalar> x(cols);
    for (std::size_t r = 0; r < cols; ++r)
        for (std::size_t k = 0; k < snf_.rank; ++k)
            if (!y[k].is_zero() && sgn(snf_.V(r, k)) != 0)
                x[r] += PLocalScalar(snf_.V(r, k)) * y[k];
    return x;
}

std::optional<std::vector<PLocalScalar>> solve_plocal(const IntMatrix& a, const IntVector& b,
                                                      std::uint64_t p)
{
    if (b.size() != a.rows())
        throw std::invalid_argument("solve_plocal: dimension mismatch");
    return PLocalSolver(a, p).solve(b);
}

std::uint64_t CokernelOrders::log_order(std::uint64_t p) const
{
    std::uint64_t s = 0;
    for (const BigInt& d : torsion)
        s += vp(d, p).value();
    return s;
}

CokernelOrders cokernel_orders(const IntMatrix& a, std::uint64_t p)
{
    const SmithForm snf = smith_normal_form(a, false);
    CokernelOrders out;
    out.free_rank = a.rows() - snf.rank;
    for (std::size_t k = 0; k < snf.rank; ++k) {
        const Valuation e = vp(snf.diagonal[k], p);
        if (e.value() > 0)
            out.torsion.push_back(ipow(p, e.value()));
    }
    std::sort(out.torsion.begin(), out.torsion.end());
    return out;
}

IntMatrix kernel_basis(const IntMatrix& a)
{
    const SmithForm snf = smith_normal_form(a, true);
    const std::size_t n = a.cols();
    IntMatrix k(n, n - snf.rank);
    for (std::size_t c = snf.rank; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r)
            k(r, c - snf.rank) = snf.V(r, c);
    return k;
}

}  // namespace kucalc
