#pragma once

// Dense truncated power series over exact integers.
//
// Three shapes are supported: QPoly (q only), ZQSeries (z and q) and
// YQSeries (Laurent in y, power series in q). Bounds are fixed when a
// series is created; every coefficient beyond them is dropped, which makes
// each series an element of the quotient ring by the truncation ideal.
// Binary operations on series with different bounds throw
// std::invalid_argument.

#include <span>
#include <string>
#include <vector>

#include "crankmex/bigint.hpp"

namespace crankmex {

/// A single term c * z^z * q^q * y^y. This is the shape of every argument
/// of a q-Pochhammer symbol used here.
struct Monomial {
    BigInt coeff{1};
    int z = 0;
    int q = 0;
    int y = 0;

    /// The same term multiplied by q^j.
    Monomial times_q(int j) const { return Monomial{coeff, z, q + j, y}; }
};

struct QBounds {
    int qmax;
};
struct ZQBounds {
    int zmax;
    int qmax;
};
struct YQBounds {
    int qmax;
};

class QPoly {
public:
    explicit QPoly(int qmax);
    QPoly(int qmax, std::vector<BigInt> coeffs);
    static QPoly one(int qmax);
    static QPoly term(int qmax, const BigInt& c, int degree);

    int qmax() const noexcept { return qmax_; }
    const BigInt& coeff(int n) const;
    std::span<const BigInt> coeffs() const noexcept { return c_; }
    /// Adds c*q^n; terms beyond qmax are dropped.
    void add_term(int n, const BigInt& c);
    /// this += c * q^shift * p
    void add_shifted(const QPoly& p, const BigInt& c, int shift);

    /// Multiplies by (1 - m); m may involve only q.
    void mul_binomial(const Monomial& m);
    /// Divides by (1 - m); m must have positive q-degree.
    void div_binomial(const Monomial& m);

    bool is_zero() const noexcept;
    /// Highest nonzero degree, -1 for the zero polynomial.
    int degree() const noexcept;
    std::string to_string() const;

    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    QPoly& operator*=(const QPoly& o);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
    friend QPoly operator-(QPoly a);
    friend bool operator==(const QPoly& a, const QPoly& b);

private:
    int qmax_;
    std::vector<BigInt> c_;
};

class ZQSeries {
public:
    ZQSeries(int zmax, int qmax);
    explicit ZQSeries(ZQBounds b) : ZQSeries(b.zmax, b.qmax) {}
    static ZQSeries one(int zmax, int qmax);

    int zmax() const noexcept { return zmax_; }
    int qmax() const noexcept { return qmax_; }
    ZQBounds bounds() const noexcept { return {zmax_, qmax_}; }
    const BigInt& coeff(int k, int n) const;
    std::span<const BigInt> coeffs() const noexcept { return c_; }
    /// Coefficient of z^k as a polynomial in q.
    QPoly row(int k) const;

    void add_term(int k, int n, const BigInt& c);
    /// this += c * z^dz * q^dq * p
    void add_shifted(const QPoly& p, const BigInt& c, int dz, int dq);
    /// this += c * z^dz * q^dq * s
    void add_shifted(const ZQSeries& s, const BigInt& c, int dz, int dq);

    /// Multiplies by (1 - m); m may not involve y.
    void mul_binomial(const Monomial& m);
    /// Divides by (1 - m); m must have positive z- or q-degree.
    void div_binomial(const Monomial& m);

    bool is_zero() const noexcept;

    ZQSeries& operator+=(const ZQSeries& o);
    ZQSeries& operator-=(const ZQSeries& o);
    friend ZQSeries operator+(ZQSeries a, const ZQSeries& b) { return a += b; }
    friend ZQSeries operator-(ZQSeries a, const ZQSeries& b) { return a -= b; }
    friend ZQSeries operator*(const ZQSeries& a, const ZQSeries& b);
    friend ZQSeries operator-(ZQSeries a);
    friend bool operator==(const ZQSeries& a, const ZQSeries& b);

private:
    std::size_t index(int k, int n) const noexcept {
        return static_cast<std::size_t>(k) * (qmax_ + 1) + n;
    }
    int zmax_;
    int qmax_;
    std::vector<BigInt> c_;
};

/// Laurent in y with exponents in [-qmax, qmax], truncated in q. Every
/// series built from factors whose y-exponent never exceeds their q-degree
/// in absolute value stays inside that window; a product that would leave
/// it throws std::domain_error instead of losing terms.
class YQSeries {
public:
    explicit YQSeries(int qmax);
    static YQSeries one(int qmax);

    int qmax() const noexcept { return qmax_; }
    const BigInt& coeff(int c, int n) const;
    std::span<const BigInt> coeffs() const noexcept { return c_; }
    /// Coefficients of q^n indexed by y-exponent + qmax.
    std::vector<BigInt> coeffs_at_q(int n) const;

    void add_term(int c, int n, const BigInt& v);
    /// this += v * y^dy * q^dq * p
    void add_shifted(const QPoly& p, const BigInt& v, int dy, int dq);

    void mul_binomial(const Monomial& m);
    /// Divides by (1 - m); m must have positive q-degree.
    void div_binomial(const Monomial& m);

    bool is_zero() const noexcept;

    YQSeries& operator+=(const YQSeries& o);
    YQSeries& operator-=(const YQSeries& o);
    friend YQSeries operator+(YQSeries a, const YQSeries& b) { return a += b; }
    friend YQSeries operator-(YQSeries a, const YQSeries& b) { return a -= b; }
    friend YQSeries operator*(const YQSeries& a, const YQSeries& b);
    friend YQSeries operator-(YQSeries a);
    friend bool operator==(const YQSeries& a, const YQSeries& b);

private:
    int width() const noexcept { return 2 * qmax_ + 1; }
    std::size_t index(int c, int n) const noexcept {
        return static_cast<std::size_t>(c + qmax_) * (qmax_ + 1) + n;
    }
    int qmax_;
    std::vector<BigInt> c_;
};

/// Multiplicative inverse; the constant term must be exactly 1
/// (std::invalid_argument otherwise).
QPoly reciprocal(const QPoly& s);
ZQSeries reciprocal(const ZQSeries& s);
YQSeries reciprocal(const YQSeries& s);

/// (a;q)_n = prod_{j<n} (1 - a q^j); n = 0 gives 1.
QPoly poch_finite(const Monomial& a, int n, QBounds b);
ZQSeries poch_finite(const Monomial& a, int n, ZQBounds b);
YQSeries poch_finite(const Monomial& a, int n, YQBounds b);

/// (a;q)_inf, keeping factors while a*q^j has q-degree <= qmax. The q-degree
/// of a must be at least 1.
QPoly poch_infinite(const Monomial& a, QBounds b);
ZQSeries poch_infinite(const Monomial& a, ZQBounds b);
YQSeries poch_infinite(const Monomial& a, YQBounds b);

/// 1/(a;q)_n and 1/(a;q)_inf built by repeated division by (1 - a q^j).
QPoly inv_poch_finite(const Monomial& a, int n, QBounds b);
ZQSeries inv_poch_finite(const Monomial& a, int n, ZQBounds b);
ZQSeries inv_poch_infinite(const Monomial& a, ZQBounds b);
YQSeries inv_poch_infinite(const Monomial& a, YQBounds b);

/// Gaussian binomial [A choose B]_q via the q-Pascal recurrence, zero when
/// B < 0 or B > A.
QPoly gaussian_binomial(int A, int B, int qmax);
/// [A choose B]_q for B = 0..A.
std::vector<QPoly> gaussian_row(int A, int qmax);

/// binom(n, 2) for any integer n >= 0.
constexpr long long tri(long long n) { return n * (n - 1) / 2; }

}  // namespace crankmex
