#include "crankmex/series.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "crankmex/kernels.hpp"

namespace crankmex {

namespace {

void require_qmax(int qmax)
{
    if (qmax < 0)
        throw std::invalid_argument("truncation bound must be nonnegative");
}

void require_same(bool same)
{
    if (!same)
        throw std::invalid_argument("series truncation bounds differ");
}

void addmul(BigInt& dst, const BigInt& a, const BigInt& b)
{
    mpz_addmul(dst.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

void submul(BigInt& dst, const BigInt& a, const BigInt& b)
{
    mpz_submul(dst.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

}  // namespace

// ---------------------------------------------------------------- QPoly

QPoly::QPoly(int qmax) : qmax_(qmax)
{
    require_qmax(qmax);
    c_.resize(static_cast<std::size_t>(qmax) + 1);
}

QPoly::QPoly(int qmax, std::vector<BigInt> coeffs) : qmax_(qmax), c_(std::move(coeffs))
{
    require_qmax(qmax);
    c_.resize(static_cast<std::size_t>(qmax) + 1);
}

QPoly QPoly::one(int qmax)
{
    QPoly p(qmax);
    p.c_[0] = 1;
    return p;
}

QPoly QPoly::term(int qmax, const BigInt& c, int degree)
{
    QPoly p(qmax);
    p.add_term(degree, c);
    return p;
}

const BigInt& QPoly::coeff(int n) const
{
    if (n < 0 || n > qmax_)
        throw std::out_of_range("q-degree out of range");
    return c_[n];
}

void QPoly::add_term(int n, const BigInt& c)
{
    if (n < 0)
        throw std::out_of_range("negative q-degree");
    if (n <= qmax_)
        c_[n] += c;
}

void QPoly::add_shifted(const QPoly& p, const BigInt& c, int shift)
{
    require_same(p.qmax_ == qmax_);
    if (shift < 0)
        throw std::out_of_range("negative q shift");
    for (int n = 0; n + shift <= qmax_; ++n)
        if (sgn(p.c_[n]) != 0)
            addmul(c_[n + shift], c, p.c_[n]);
}

void QPoly::mul_binomial(const Monomial& m)
{
    if (m.z != 0 || m.y != 0 || m.q < 0)
        throw std::invalid_argument("monomial is not a power of q");
    if (m.q == 0) {
        const BigInt f = 1 - m.coeff;
        for (auto& x : c_)
            x *= f;
        return;
    }
    for (int n = qmax_; n >= m.q; --n)
        submul(c_[n], m.coeff, c_[n - m.q]);
}

void QPoly::div_binomial(const Monomial& m)
{
    if (m.z != 0 || m.y != 0 || m.q < 1)
        throw std::invalid_argument("divisor 1 - m needs m a positive power of q");
    for (int n = m.q; n <= qmax_; ++n)
        addmul(c_[n], m.coeff, c_[n - m.q]);
}

bool QPoly::is_zero() const noexcept
{
    for (const auto& x : c_)
        if (sgn(x) != 0)
            return false;
    return true;
}

int QPoly::degree() const noexcept
{
    for (int n = qmax_; n >= 0; --n)
        if (sgn(c_[n]) != 0)
            return n;
    return -1;
}

std::string QPoly::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (int n = 0; n <= qmax_; ++n) {
        const BigInt& c = c_[n];
        if (sgn(c) == 0)
            continue;
        BigInt mag = abs(c);
        if (first)
            os << (sgn(c) < 0 ? "-" : "");
        else
            os << (sgn(c) < 0 ? " - " : " + ");
        first = false;
        if (n == 0 || mag != 1)
            os << mag.get_str() << (n == 0 ? "" : "*");
        if (n == 1)
            os << 'q';
        else if (n > 1)
            os << "q^" << n;
    }
    return first ? "0" : os.str();
}

QPoly& QPoly::operator+=(const QPoly& o)
{
    require_same(qmax_ == o.qmax_);
    for (int n = 0; n <= qmax_; ++n)
        c_[n] += o.c_[n];
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o)
{
    require_same(qmax_ == o.qmax_);
    for (int n = 0; n <= qmax_; ++n)
        c_[n] -= o.c_[n];
    return *this;
}

QPoly& QPoly::operator*=(const QPoly& o)
{
    require_same(qmax_ == o.qmax_);
    QPoly out(qmax_);
    kernels::q_mul(c_, o.c_, out.c_);
    return *this = std::move(out);
}

QPoly operator-(QPoly a)
{
    for (auto& x : a.c_)
        x = -x;
    return a;
}

bool operator==(const QPoly& a, const QPoly& b)
{
    require_same(a.qmax_ == b.qmax_);
    return a.c_ == b.c_;
}

// ------------------------------------------------------------- ZQSeries

ZQSeries::ZQSeries(int zmax, int qmax) : zmax_(zmax), qmax_(qmax)
{
    require_qmax(zmax);
    require_qmax(qmax);
    c_.resize(static_cast<std::size_t>(zmax + 1) * (qmax + 1));
}

ZQSeries ZQSeries::one(int zmax, int qmax)
{
    ZQSeries s(zmax, qmax);
    s.c_[0] = 1;
    return s;
}

const BigInt& ZQSeries::coeff(int k, int n) const
{
    if (k < 0 || k > zmax_ || n < 0 || n > qmax_)
        throw std::out_of_range("(z, q) index out of range");
    return c_[index(k, n)];
}

QPoly ZQSeries::row(int k) const
{
    if (k < 0 || k > zmax_)
        throw std::out_of_range("z-degree out of range");
    const auto first = c_.begin() + static_cast<std::ptrdiff_t>(index(k, 0));
    return QPoly(qmax_, std::vector<BigInt>(first, first + qmax_ + 1));
}

void ZQSeries::add_term(int k, int n, const BigInt& c)
{
    if (k < 0 || n < 0)
        throw std::out_of_range("negative exponent");
    if (k <= zmax_ && n <= qmax_)
        c_[index(k, n)] += c;
}

void ZQSeries::add_shifted(const QPoly& p, const BigInt& c, int dz, int dq)
{
    require_same(p.qmax() == qmax_);
    if (dz < 0 || dq < 0)
        throw std::out_of_range("negative shift");
    if (dz > zmax_)
        return;
    const auto src = p.coeffs();
    for (int n = 0; n + dq <= qmax_; ++n)
        if (sgn(src[n]) != 0)
            addmul(c_[index(dz, n + dq)], c, src[n]);
}

void ZQSeries::add_shifted(const ZQSeries& s, const BigInt& c, int dz, int dq)
{
    require_same(s.bounds().zmax == zmax_ && s.bounds().qmax == qmax_);
    if (dz < 0 || dq < 0)
        throw std::out_of_range("negative shift");
    for (int k = 0; k + dz <= zmax_; ++k)
        for (int n = 0; n + dq <= qmax_; ++n)
            if (sgn(s.c_[index(k, n)]) != 0)
                addmul(c_[index(k + dz, n + dq)], c, s.c_[index(k, n)]);
}

void ZQSeries::mul_binomial(const Monomial& m)
{
    if (m.y != 0 || m.z < 0 || m.q < 0)
        throw std::invalid_argument("monomial must be c z^a q^b with a, b >= 0");
    if (m.z == 0 && m.q == 0) {
        const BigInt f = 1 - m.coeff;
        for (auto& x : c_)
            x *= f;
        return;
    }
    for (int k = zmax_; k >= m.z; --k)
        for (int n = qmax_; n >= m.q; --n)
            submul(c_[index(k, n)], m.coeff, c_[index(k - m.z, n - m.q)]);
}

void ZQSeries::div_binomial(const Monomial& m)
{
    if (m.y != 0 || m.z < 0 || m.q < 0 || (m.z == 0 && m.q == 0))
        throw std::invalid_argument("divisor 1 - m needs m of positive degree");
    for (int k = m.z; k <= zmax_; ++k)
        for (int n = m.q; n <= qmax_; ++n)
            addmul(c_[index(k, n)], m.coeff, c_[index(k - m.z, n - m.q)]);
}

bool ZQSeries::is_zero() const noexcept
{
    for (const auto& x : c_)
        if (sgn(x) != 0)
            return false;
    return true;
}

ZQSeries& ZQSeries::operator+=(const ZQSeries& o)
{
    require_same(zmax_ == o.zmax_ && qmax_ == o.qmax_);
    for (std::size_t i = 0; i < c_.size(); ++i)
        c_[i] += o.c_[i];
    return *this;
}

ZQSeries& ZQSeries::operator-=(const ZQSeries& o)
{
    require_same(zmax_ == o.zmax_ && qmax_ == o.qmax_);
    for (std::size_t i = 0; i < c_.size(); ++i)
        c_[i] -= o.c_[i];
    return *this;
}

ZQSeries operator*(const ZQSeries& a, const ZQSeries& b)
{
    require_same(a.zmax_ == b.zmax_ && a.qmax_ == b.qmax_);
    ZQSeries out(a.zmax_, a.qmax_);
    kernels::zq_mul_omp(a.c_, b.c_, out.c_, a.zmax_, a.qmax_);
    return out;
}

ZQSeries operator-(ZQSeries a)
{
    for (auto& x : a.c_)
        x = -x;
    return a;
}

bool operator==(const ZQSeries& a, const ZQSeries& b)
{
    require_same(a.zmax_ == b.zmax_ && a.qmax_ == b.qmax_);
    return a.c_ == b.c_;
}

// ------------------------------------------------------------- YQSeries

YQSeries::YQSeries(int qmax) : qmax_(qmax)
{
    require_qmax(qmax);
    c_.resize(static_cast<std::size_t>(2 * qmax + 1) * (qmax + 1));
}

YQSeries YQSeries::one(int qmax)
{
    YQSeries s(qmax);
    s.c_[s.index(0, 0)] = 1;
    return s;
}

const BigInt& YQSeries::coeff(int c, int n) const
{
    if (c < -qmax_ || c > qmax_ || n < 0 || n > qmax_)
        throw std::out_of_range("(y, q) index out of range");
    return c_[index(c, n)];
}

std::vector<BigInt> YQSeries::coeffs_at_q(int n) const
{
    if (n < 0 || n > qmax_)
        throw std::out_of_range("q-degree out of range");
    std::vector<BigInt> out;
    out.reserve(width());
    for (int c = -qmax_; c <= qmax_; ++c)
        out.push_back(c_[index(c, n)]);
    return out;
}

void YQSeries::add_term(int c, int n, const BigInt& v)
{
    if (n < 0)
        throw std::out_of_range("negative q-degree");
    if (n > qmax_)
        return;
    if (c < -qmax_ || c > qmax_)
        throw std::domain_error("y-exponent outside the series window");
    c_[index(c, n)] += v;
}

void YQSeries::add_shifted(const QPoly& p, const BigInt& v, int dy, int dq)
{
    require_same(p.qmax() == qmax_);
    if (dq < 0)
        throw std::out_of_range("negative q shift");
    const auto src = p.coeffs();
    for (int n = 0; n + dq <= qmax_; ++n)
        if (sgn(src[n]) != 0) {
            if (dy < -qmax_ || dy > qmax_)
                throw std::domain_error("y-exponent outside the series window");
            addmul(c_[index(dy, n + dq)], v, src[n]);
        }
}

namespace {

void check_y_factor(const Monomial& m)
{
    if (m.z != 0 || m.q < 0 || std::abs(m.y) > m.q)
        throw std::invalid_argument("monomial must be c y^e q^b with |e| <= b");
}

}  // namespace

void YQSeries::mul_binomial(const Monomial& m)
{
    check_y_factor(m);
    if (m.q == 0) {
        // m.y is 0 here as well
        const BigInt f = 1 - m.coeff;
        for (auto& x : c_)
            x *= f;
        return;
    }
    for (int n = 0; n + m.q <= qmax_; ++n)
        for (int c = -qmax_; c <= qmax_; ++c) {
            const int t = c + m.y;
            if ((t < -qmax_ || t > qmax_) && sgn(c_[index(c, n)]) != 0)
                throw std::domain_error("product leaves the y window");
        }
    for (int n = qmax_; n >= m.q; --n)
        for (int c = -qmax_; c <= qmax_; ++c) {
            const int s = c - m.y;
            if (s >= -qmax_ && s <= qmax_)
                submul(c_[index(c, n)], m.coeff, c_[index(s, n - m.q)]);
        }
}

void YQSeries::div_binomial(const Monomial& m)
{
    check_y_factor(m);
    if (m.q < 1)
        throw std::invalid_argument("divisor 1 - m needs m of positive q-degree");
    std::vector<BigInt> work = c_;
    for (int n = m.q; n <= qmax_; ++n) {
        const int src_n = n - m.q;
        for (int c = -qmax_; c <= qmax_; ++c) {
            const int t = c + m.y;
            if ((t < -qmax_ || t > qmax_) && sgn(work[index(c, src_n)]) != 0)
                throw std::domain_error("quotient leaves the y window");
        }
        for (int c = -qmax_; c <= qmax_; ++c) {
            const int s = c - m.y;
            if (s >= -qmax_ && s <= qmax_)
                addmul(work[index(c, n)], m.coeff, work[index(s, src_n)]);
        }
    }
    c_ = std::move(work);
}

bool YQSeries::is_zero() const noexcept
{
    for (const auto& x : c_)
        if (sgn(x) != 0)
            return false;
    return true;
}

YQSeries& YQSeries::operator+=(const YQSeries& o)
{
    require_same(qmax_ == o.qmax_);
    for (std::size_t i = 0; i < c_.size(); ++i)
        c_[i] += o.c_[i];
    return *this;
}

YQSeries& YQSeries::operator-=(const YQSeries& o)
{
    require_same(qmax_ == o.qmax_);
    for (std::size_t i = 0; i < c_.size(); ++i)
        c_[i] -= o.c_[i];
    return *this;
}

YQSeries operator*(const YQSeries& a, const YQSeries& b)
{
    require_same(a.qmax_ == b.qmax_);
    YQSeries out(a.qmax_);
    if (!kernels::yq_mul_omp(a.c_, b.c_, out.c_, a.qmax_))
        throw std::domain_error("product leaves the y window");
    return out;
}

YQSeries operator-(YQSeries a)
{
    for (auto& x : a.c_)
        x = -x;
    return a;
}

bool operator==(const YQSeries& a, const YQSeries& b)
{
    require_same(a.qmax_ == b.qmax_);
    return a.c_ == b.c_;
}

// ----------------------------------------------------------- reciprocal

QPoly reciprocal(const QPoly& s)
{
    if (s.coeff(0) != 1)
        throw std::invalid_argument("reciprocal needs constant term 1");
    const int qmax = s.qmax();
    const auto a = s.coeffs();
    std::vector<BigInt> r(static_cast<std::size_t>(qmax) + 1);
    r[0] = 1;
    for (int n = 1; n <= qmax; ++n) {
        BigInt acc = 0;
        for (int j = 1; j <= n; ++j)
            if (sgn(a[j]) != 0)
                addmul(acc, a[j], r[n - j]);
        r[n] = -acc;
    }
    return QPoly(qmax, std::move(r));
}

ZQSeries reciprocal(const ZQSeries& s)
{
    if (s.coeff(0, 0) != 1)
        throw std::invalid_argument("reciprocal needs constant term 1");
    const int zmax = s.zmax();
    const int qmax = s.qmax();
    // rows: r_0 = 1/s_0, r_k = -r_0 * sum_{i=1..k} s_i r_{k-i}
    std::vector<QPoly> srow, r;
    for (int k = 0; k <= zmax; ++k)
        srow.push_back(s.row(k));
    r.push_back(reciprocal(srow[0]));
    for (int k = 1; k <= zmax; ++k) {
        QPoly acc(qmax);
        for (int i = 1; i <= k; ++i)
            if (!srow[i].is_zero())
                acc += srow[i] * r[k - i];
        r.push_back(-(r[0] * acc));
    }
    ZQSeries out(zmax, qmax);
    for (int k = 0; k <= zmax; ++k)
        out.add_shifted(r[k], 1, k, 0);
    return out;
}

YQSeries reciprocal(const YQSeries& s)
{
    const int qmax = s.qmax();
    for (int c = -qmax; c <= qmax; ++c)
        if (s.coeff(c, 0) != (c == 0 ? 1 : 0))
            throw std::invalid_argument("reciprocal needs q^0 coefficient exactly 1");
    // r_n = -sum_{j=1..n} s_j r_{n-j}, each s_j a Laurent polynomial in y
    YQSeries r = YQSeries::one(qmax);
    for (int n = 1; n <= qmax; ++n)
        for (int j = 1; j <= n; ++j)
            for (int c1 = -qmax; c1 <= qmax; ++c1) {
                const BigInt& sv = s.coeff(c1, j);
                if (sgn(sv) == 0)
                    continue;
                for (int c2 = -qmax; c2 <= qmax; ++c2) {
                    const BigInt& rv = r.coeff(c2, n - j);
                    if (sgn(rv) == 0)
                        continue;
                    r.add_term(c1 + c2, n, -(sv * rv));
                }
            }
    return r;
}

// -------------------------------------------------------------- Pochhammer

namespace {

template <class Series>
Series poch_finite_impl(const Monomial& a, int n, Series s)
{
    if (n < 0)
        throw std::invalid_argument("Pochhammer length must be nonnegative");
    for (int j = 0; j < n; ++j)
        s.mul_binomial(a.times_q(j));
    return s;
}

template <class Series>
Series poch_infinite_impl(const Monomial& a, int qmax, Series s)
{
    if (a.q < 1)
        throw std::invalid_argument("infinite Pochhammer needs a of positive q-degree");
    for (int j = 0; a.q + j <= qmax; ++j)
        s.mul_binomial(a.times_q(j));
    return s;
}

template <class Series>
Series inv_poch_finite_impl(const Monomial& a, int n, Series s)
{
    if (n < 0)
        throw std::invalid_argument("Pochhammer length must be nonnegative");
    for (int j = 0; j < n; ++j)
        s.div_binomial(a.times_q(j));
    return s;
}

template <class Series>
Series inv_poch_infinite_impl(const Monomial& a, int qmax, Series s)
{
    if (a.q < 1)
        throw std::invalid_argument("infinite Pochhammer needs a of positive q-degree");
    for (int j = 0; a.q + j <= qmax; ++j)
        s.div_binomial(a.times_q(j));
    return s;
}

}  // namespace

QPoly poch_finite(const Monomial& a, int n, QBounds b)
{
    return poch_finite_impl(a, n, QPoly::one(b.qmax));
}

ZQSeries poch_finite(const Monomial& a, int n, ZQBounds b)
{
    return poch_finite_impl(a, n, ZQSeries::one(b.zmax, b.qmax));
}

YQSeries poch_finite(const Monomial& a, int n, YQBounds b)
{
    return poch_finite_impl(a, n, YQSeries::one(b.qmax));
}

QPoly poch_infinite(const Monomial& a, QBounds b)
{
    return poch_infinite_impl(a, b.qmax, QPoly::one(b.qmax));
}

ZQSeries poch_infinite(const Monomial& a, ZQBounds b)
{
    return poch_infinite_impl(a, b.qmax, ZQSeries::one(b.zmax, b.qmax));
}

YQSeries poch_infinite(const Monomial& a, YQBounds b)
{
    return poch_infinite_impl(a, b.qmax, YQSeries::one(b.qmax));
}

QPoly inv_poch_finite(const Monomial& a, int n, QBounds b)
{
    return inv_poch_finite_impl(a, n, QPoly::one(b.qmax));
}

ZQSeries inv_poch_finite(const Monomial& a, int n, ZQBounds b)
{
    return inv_poch_finite_impl(a, n, ZQSeries::one(b.zmax, b.qmax));
}

ZQSeries inv_poch_infinite(const Monomial& a, ZQBounds b)
{
    return inv_poch_infinite_impl(a, b.qmax, ZQSeries::one(b.zmax, b.qmax));
}

YQSeries inv_poch_infinite(const Monomial& a, YQBounds b)
{
    return inv_poch_infinite_impl(a, b.qmax, YQSeries::one(b.qmax));
}

namespace {

// Coefficient arrays of [a choose b] for b = 0..bmax, advanced in place
// from a = 0 up to A. Row b is sized for its final degree b(A-b).
std::vector<std::vector<BigInt>> gaussian_rows(int A, int bmax)
{
    std::vector<std::vector<BigInt>> rows(static_cast<std::size_t>(bmax) + 1);
    for (int b = 0; b <= bmax; ++b)
        rows[b].resize(static_cast<std::size_t>(b) * (A - b) + 1);
    rows[0][0] = 1;
    for (int a = 1; a <= A; ++a) {
        for (int b = std::min(a, bmax); b >= 1; --b) {
            auto& r = rows[b];
            const auto& lower = rows[b - 1];
            const int new_deg = b * (a - b);
            // r <- q^b r + lower, where r = [a-1, b] and lower = [a-1, b-1]
            for (int d = new_deg; d >= b; --d)
                r[d] = r[d - b];
            for (int d = 0; d < b && d <= new_deg; ++d)
                r[d] = 0;
            const int lower_deg = (b - 1) * (a - b);
            for (int d = 0; d <= lower_deg; ++d)
                r[d] += lower[d];
        }
    }
    return rows;
}

QPoly truncated(int qmax, const std::vector<BigInt>& coeffs)
{
    QPoly p(qmax);
    for (std::size_t d = 0; d < coeffs.size() && d <= static_cast<std::size_t>(qmax); ++d)
        p.add_term(static_cast<int>(d), coeffs[d]);
    return p;
}

}  // namespace

QPoly gaussian_binomial(int A, int B, int qmax)
{
    if (B < 0 || B > A)
        return QPoly(qmax);
    return truncated(qmax, gaussian_rows(A, B)[B]);
}

std::vector<QPoly> gaussian_row(int A, int qmax)
{
    if (A < 0)
        throw std::invalid_argument("gaussian_row needs A >= 0");
    std::vector<QPoly> out;
    for (const auto& r : gaussian_rows(A, A))
        out.push_back(truncated(qmax, r));
    return out;
}

}  // namespace crankmex
