#include "crankmex/identities.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

namespace crankmex {

namespace {

const Monomial kQ{1, 0, 1, 0};
const Monomial kZQ2{1, 1, 2, 0};

BigInt sign(long long e)
{
    return e % 2 == 0 ? BigInt(1) : BigInt(-1);
}

std::string str(long long v)
{
    return std::to_string(v);
}

void require_box(int zmax, int qmax)
{
    if (zmax < 1 || qmax < 1)
        throw std::invalid_argument("series bounds must be at least 1");
}

// 1/(q;q)_j for j = 0..count-1.
std::vector<QPoly> inv_q_factorials(int count, int qmax)
{
    std::vector<QPoly> r;
    r.push_back(QPoly::one(qmax));
    for (int j = 1; j < count; ++j) {
        QPoly next = r.back();
        next.div_binomial(kQ.times_q(j - 1));
        r.push_back(std::move(next));
    }
    return r;
}

std::optional<Counterexample> first_diff(const ZQSeries& a, const ZQSeries& b, const std::string& what)
{
    for (int k = 0; k <= a.zmax(); ++k)
        for (int n = 0; n <= a.qmax(); ++n)
            if (a.coeff(k, n) != b.coeff(k, n))
                return Counterexample{{{"compare", what}, {"k", str(k)}, {"n", str(n)}},
                                      a.coeff(k, n).get_str(),
                                      b.coeff(k, n).get_str()};
    return std::nullopt;
}

std::optional<Counterexample> first_diff(const QPoly& a, const QPoly& b, ParamList where)
{
    for (int n = 0; n <= a.qmax(); ++n)
        if (a.coeff(n) != b.coeff(n)) {
            where.emplace_back("n", str(n));
            return Counterexample{std::move(where), a.coeff(n).get_str(), b.coeff(n).get_str()};
        }
    return std::nullopt;
}

std::optional<Counterexample> first_diff(const YQSeries& a, const YQSeries& b, const std::string& what)
{
    const int qmax = a.qmax();
    for (int c = -qmax; c <= qmax; ++c)
        for (int n = 0; n <= qmax; ++n)
            if (a.coeff(c, n) != b.coeff(c, n))
                return Counterexample{{{"compare", what}, {"y", str(c)}, {"n", str(n)}},
                                      a.coeff(c, n).get_str(),
                                      b.coeff(c, n).get_str()};
    return std::nullopt;
}

ParamList box_params(int zmax, int qmax)
{
    return {{"zmax", str(zmax)}, {"qmax", str(qmax)}};
}

// sum_{m>=0} z^{m+n} q^{n+(m+n)(n+1)} / (q;q)_{m+n}, the inner sum of the
// third K term for a fixed n.
ZQSeries third_term_inner(int n, int zmax, int qmax, const std::vector<QPoly>& inv_fact)
{
    ZQSeries t(zmax, qmax);
    for (int m = 0;; ++m) {
        const int j = m + n;
        const long long e = n + static_cast<long long>(j) * (n + 1);
        if (e > qmax || j > zmax)
            break;
        t.add_shifted(inv_fact[j], 1, j, static_cast<int>(e));
    }
    return t;
}

}  // namespace

ZQSeries build_M_structural(int zmax, int qmax)
{
    require_box(zmax, qmax);
    const ZQBounds box{zmax, qmax};
    ZQSeries m = inv_poch_infinite(kZQ2, box);
    for (int n = 1;; ++n) {
        long long e = 0;
        for (int j = 1; j <= 2 * n; ++j)
            e += j;
        if (e > qmax)
            break;
        // z^{2n-1} q^{1+...+2n} (1 - z q^{2n+1}) / ((1-q)(zq^2;q)_inf)
        ZQSeries term(box);
        term.add_term(2 * n - 1, static_cast<int>(e), 1);
        term.add_term(2 * n, static_cast<int>(e) + 2 * n + 1, -1);
        term.div_binomial(kQ);
        for (int j = 0; 2 + j <= qmax; ++j)
            term.div_binomial(kZQ2.times_q(j));
        m += term;
    }
    return m;
}

ZQSeries cleared_left(int zmax, int qmax)
{
    require_box(zmax, qmax);
    QPoly one_minus_q = QPoly::one(qmax);
    one_minus_q.add_term(1, -1);
    const QPoly geometric = reciprocal(one_minus_q);
    ZQSeries s = ZQSeries::one(zmax, qmax);
    for (int n = 2; tri(n + 1) <= qmax && n - 1 <= zmax; ++n)
        s.add_shifted(geometric, sign(n), n - 1, static_cast<int>(tri(n + 1)));
    return s;
}

ZQSeries build_M_closed(int zmax, int qmax)
{
    require_box(zmax, qmax);
    return cleared_left(zmax, qmax) * reciprocal(poch_infinite(kZQ2, ZQBounds{zmax, qmax}));
}

ZQSeries build_K(int zmax, int qmax)
{
    require_box(zmax, qmax);
    const auto inv_fact = inv_q_factorials(zmax + 1, qmax);
    ZQSeries k = ZQSeries::one(zmax, qmax);
    k.add_term(1, 1, -1);
    // denom = 1/(zq^2;q)_{n-1}
    ZQSeries denom = ZQSeries::one(zmax, qmax);
    for (int n = 1; n <= qmax; ++n) {
        if (n >= 2)
            denom.div_binomial(Monomial{1, 1, n, 0});
        k.add_shifted(denom, 1, 1, n);
        if (n + static_cast<long long>(n) * (n + 1) > qmax || n > zmax)
            continue;
        ZQSeries third = third_term_inner(n, zmax, qmax, inv_fact);
        for (int j = 0; j < n - 1; ++j)
            third.div_binomial(kZQ2.times_q(j));
        k += third;
    }
    return k;
}

ZQSeries cleared_right_products(int zmax, int qmax)
{
    require_box(zmax, qmax);
    const ZQBounds box{zmax, qmax};
    const auto inv_fact = inv_q_factorials(zmax + 1, qmax);
    ZQSeries s = poch_infinite(Monomial{1, 1, 1, 0}, box);
    for (int n = 1; n <= qmax; ++n) {
        const Monomial tail{1, 1, n + 1, 0};
        s.add_shifted(poch_infinite(tail, box), 1, 1, n);
        if (n + static_cast<long long>(n) * (n + 1) > qmax || n > zmax)
            continue;
        ZQSeries third = third_term_inner(n, zmax, qmax, inv_fact);
        for (int j = 0; n + 1 + j <= qmax; ++j)
            third.mul_binomial(tail.times_q(j));
        s += third;
    }
    return s;
}

ZQSeries cleared_right_expanded(int zmax, int qmax)
{
    require_box(zmax, qmax);
    const auto inv_fact = inv_q_factorials(zmax + 1, qmax);
    ZQSeries s(zmax, qmax);
    // (zq;q)_inf = sum_n (-1)^n z^n q^{binom(n+1,2)} / (q;q)_n
    for (int n = 0; n <= zmax && tri(n + 1) <= qmax; ++n)
        s.add_shifted(inv_fact[n], sign(n), n, static_cast<int>(tri(n + 1)));
    // sum_{n>=1} z q^n sum_s (-1)^s z^s q^{s(n+1)+binom(s,2)} / (q;q)_s
    for (int n = 1; n <= qmax; ++n)
        for (int t = 0; 1 + t <= zmax; ++t) {
            const long long e = n + static_cast<long long>(t) * (n + 1) + tri(t);
            if (e > qmax)
                break;
            s.add_shifted(inv_fact[t], sign(t), 1 + t, static_cast<int>(e));
        }
    // sum_{n>=1,m>=0} q^{n+(m+n)(n+1)} z^{m+n} / (q;q)_{m+n}
    //   * sum_s (-1)^s z^s q^{binom(s+1,2)+sn} / (q;q)_s
    for (int n = 1; n <= qmax; ++n)
        for (int m = 0;; ++m) {
            const int j = m + n;
            const long long e1 = n + static_cast<long long>(j) * (n + 1);
            if (e1 > qmax || j > zmax)
                break;
            for (int t = 0; j + t <= zmax; ++t) {
                const long long e = e1 + tri(t + 1) + static_cast<long long>(t) * n;
                if (e > qmax)
                    break;
                s.add_shifted(inv_fact[j] * inv_fact[t], sign(t), j + t, static_cast<int>(e));
            }
        }
    return s;
}

YQSeries crank_gf_product(int qmax)
{
    if (qmax < 1)
        throw std::invalid_argument("qmax must be at least 1");
    const YQBounds b{qmax};
    YQSeries s = poch_infinite(kQ, b);
    for (int j = 0; 1 + j <= qmax; ++j) {
        s.div_binomial(Monomial{1, 0, 1 + j, 1});
        s.div_binomial(Monomial{1, 0, 1 + j, -1});
    }
    return s;
}

YQSeries crank_gf_expanded(int qmax)
{
    if (qmax < 1)
        throw std::invalid_argument("qmax must be at least 1");
    const auto inv_fact = inv_q_factorials(qmax + 1, qmax);
    YQSeries s = YQSeries::one(qmax);
    s.add_term(0, 1, -1);
    // shifted = 1/(q^2;q)_{n-1}
    QPoly shifted = QPoly::one(qmax);
    for (int n = 1; n <= qmax; ++n) {
        if (n >= 2)
            shifted.div_binomial(kQ.times_q(n - 1));
        s.add_shifted(shifted, 1, n, n);
        for (int m = 0;; ++m) {
            const long long e = n + static_cast<long long>(m) * (n + 1);
            if (e > qmax)
                break;
            s.add_shifted(shifted * inv_fact[m], 1, m - n, static_cast<int>(e));
        }
    }
    return s;
}

namespace {

void require_lemma_args(int N, int H, int qmax)
{
    if (N < 1)
        throw std::invalid_argument("lemma needs N >= 1");
    if (H < 0 || H > N)
        throw std::invalid_argument("lemma needs 0 <= H <= N");
    if (qmax < static_cast<long long>(N) * N)
        throw std::invalid_argument("lemma needs qmax >= N^2");
}

}  // namespace

QPoly lemma_sum(int N, int H, int qmax)
{
    require_lemma_args(N, H, qmax);
    const auto binoms = gaussian_row(N, qmax);
    QPoly s(qmax);
    for (int m = 0; m <= H; ++m)
        s.add_shifted(binoms[m], sign(m), static_cast<int>(tri(m)));
    return s;
}

QPoly lemma_closed(int N, int H, int qmax)
{
    require_lemma_args(N, H, qmax);
    QPoly s(qmax);
    s.add_shifted(gaussian_binomial(N - 1, H, qmax), sign(H), static_cast<int>(tri(H + 1)));
    return s;
}

int zN_min_qmax(int N)
{
    return static_cast<int>(tri(N + 2) + N);
}

QPoly zN_left(int N, int qmax)
{
    if (N < 1)
        throw std::invalid_argument("N must be at least 1");
    if (qmax < tri(N + 2))
        throw std::invalid_argument("qmax must be at least binom(N+2, 2)");
    QPoly p = QPoly::term(qmax, sign(N + 1), static_cast<int>(tri(N + 2)));
    p.div_binomial(kQ);
    return p;
}

QPoly zN_right_first_two(int N, int qmax)
{
    if (N < 1)
        throw std::invalid_argument("N must be at least 1");
    const auto inv_fact = inv_q_factorials(N + 1, qmax);
    QPoly p(qmax);
    if (tri(N + 1) <= qmax)
        p.add_shifted(inv_fact[N], sign(N), static_cast<int>(tri(N + 1)));
    for (int n = 1;; ++n) {
        const long long e = n + static_cast<long long>(N - 1) * (n + 1) + tri(N - 1);
        if (e > qmax)
            break;
        p.add_shifted(inv_fact[N - 1], sign(N - 1), static_cast<int>(e));
    }
    return p;
}

QPoly zN_right_third(int N, int qmax)
{
    if (N < 1)
        throw std::invalid_argument("N must be at least 1");
    if (qmax < zN_min_qmax(N))
        throw std::invalid_argument("qmax must be at least binom(N+2, 2) + N");
    QPoly total(qmax);
    // group the (n, m) terms by a = n + m, which fixes the denominator
    // (q;q)_a (q;q)_{N-a}
    for (int a = 1; a <= N; ++a) {
        QPoly numer(qmax);
        for (int n = 1; n <= a; ++n) {
            const long long e = n + static_cast<long long>(a) * (n + 1) + tri(N - a + 1) +
                                static_cast<long long>(N - a) * n;
            if (e <= qmax)
                numer.add_term(static_cast<int>(e), sign(N - a));
        }
        for (int j = 1; j <= a; ++j)
            numer.div_binomial(kQ.times_q(j - 1));
        for (int j = 1; j <= N - a; ++j)
            numer.div_binomial(kQ.times_q(j - 1));
        total += numer;
    }
    return total;
}

QPoly zN_right_third_closed(int N, int qmax)
{
    if (N < 1)
        throw std::invalid_argument("N must be at least 1");
    QPoly p = poch_finite(Monomial{1, 0, 2, 0}, N - 1, QBounds{qmax});
    for (int j = 1; j <= N; ++j)
        p.div_binomial(kQ.times_q(j - 1));
    QPoly out(qmax);
    out.add_shifted(p, sign(N - 1), static_cast<int>(tri(N + 1) + N + 1));
    return out;
}

// ------------------------------------------------------------ verdicts

Verdict verify_M_equals_K(int zmax, int qmax)
{
    require_box(zmax, qmax);
    const ParamList params = box_params(zmax, qmax);
    const ZQSeries ms = build_M_structural(zmax, qmax);
    const ZQSeries mc = build_M_closed(zmax, qmax);
    const ZQSeries k = build_K(zmax, qmax);
    if (auto cx = first_diff(ms, mc, "M_structural:M_closed"))
        return Verdict::failed("M_equals_K", params, *cx);
    if (auto cx = first_diff(ms, k, "M_structural:K"))
        return Verdict::failed("M_equals_K", params, *cx);
    return Verdict::passed("M_equals_K", params);
}

Verdict verify_series_oracle(int max_n)
{
    if (max_n < 0)
        throw std::invalid_argument("max_n must be nonnegative");
    const int bound = std::max(1, max_n);
    const ParamList params{{"max_n", str(max_n)}};
    const ZQSeries m = build_M_structural(bound, bound);
    const ZQSeries k = build_K(bound, bound);
    const CountTable mex_t = count_table(max_n, Statistic::odd_mex);
    const CountTable crank_t = count_table(max_n, Statistic::nonneg_crank);
    for (int n = 0; n <= max_n; ++n)
        for (int j = 0; j <= bound; ++j) {
            const BigInt want_m = j <= n ? mex_t.at(n, j) : BigInt(0);
            const BigInt want_k = j <= n ? crank_t.at(n, j) : BigInt(0);
            if (m.coeff(j, n) != want_m)
                return Verdict::failed("series_oracle", params,
                                       {{{"series", "M"}, {"k", str(j)}, {"n", str(n)}},
                                        m.coeff(j, n).get_str(),
                                        want_m.get_str()});
            if (k.coeff(j, n) != want_k)
                return Verdict::failed("series_oracle", params,
                                       {{{"series", "K"}, {"k", str(j)}, {"n", str(n)}},
                                        k.coeff(j, n).get_str(),
                                        want_k.get_str()});
        }
    return Verdict::passed("series_oracle", params);
}

Verdict verify_cleared_forms(int zmax, int qmax)
{
    require_box(zmax, qmax);
    const ParamList params = box_params(zmax, qmax);
    const ZQSeries left = cleared_left(zmax, qmax);
    const ZQSeries m_times = build_M_closed(zmax, qmax) * poch_infinite(kZQ2, ZQBounds{zmax, qmax});
    if (auto cx = first_diff(left, m_times, "cleared_left:M_closed*(zq^2;q)_inf"))
        return Verdict::failed("cleared_forms", params, *cx);
    if (auto cx = first_diff(left, cleared_right_products(zmax, qmax), "cleared_left:right_products"))
        return Verdict::failed("cleared_forms", params, *cx);
    if (auto cx = first_diff(left, cleared_right_expanded(zmax, qmax), "cleared_left:right_expanded"))
        return Verdict::failed("cleared_forms", params, *cx);
    return Verdict::passed("cleared_forms", params);
}

Verdict verify_crank_gf(int qmax)
{
    const ParamList params{{"qmax", str(qmax)}};
    if (auto cx = first_diff(crank_gf_product(qmax), crank_gf_expanded(qmax), "product:expanded"))
        return Verdict::failed("crank_gf", params, *cx);
    return Verdict::passed("crank_gf", params);
}

Verdict verify_crank_anomaly(int qmax)
{
    const ParamList params{{"qmax", str(qmax)}};
    const YQSeries g = crank_gf_product(qmax);
    for (int c = -qmax; c <= qmax; ++c) {
        const BigInt want = c == -1 || c == 1 ? BigInt(1) : c == 0 ? BigInt(-1) : BigInt(0);
        if (g.coeff(c, 1) != want)
            return Verdict::failed("crank_anomaly", params,
                                   {{{"y", str(c)}, {"n", "1"}}, g.coeff(c, 1).get_str(), want.get_str()});
    }
    return Verdict::passed("crank_anomaly", params);
}

Verdict verify_crank_distribution(int n_low, int n_high, int qmax)
{
    if (n_low < 2 || n_low > n_high || n_high > qmax)
        throw std::invalid_argument("crank distribution needs 2 <= n_low <= n_high <= qmax");
    const ParamList params{{"n_low", str(n_low)}, {"n_high", str(n_high)}, {"qmax", str(qmax)}};
    const YQSeries g = crank_gf_product(qmax);
    for (int n = n_low; n <= n_high; ++n) {
        std::vector<unsigned long> counts(2 * static_cast<std::size_t>(n) + 1, 0);
        for_each_partition(n, [&](const Partition& p) { ++counts[crank(p) + n]; });
        for (int c = -qmax; c <= qmax; ++c) {
            const BigInt want = c >= -n && c <= n ? BigInt(counts[c + n]) : BigInt(0);
            if (g.coeff(c, n) != want)
                return Verdict::failed("crank_distribution", params,
                                       {{{"y", str(c)}, {"n", str(n)}}, g.coeff(c, n).get_str(), want.get_str()});
        }
    }
    return Verdict::passed("crank_distribution", params);
}

Verdict verify_lemma(int max_N)
{
    if (max_N < 1)
        throw std::invalid_argument("max_N must be at least 1");
    const ParamList params{{"max_N", str(max_N)}};
    for (int N = 1; N <= max_N; ++N)
        for (int H = 0; H <= N; ++H) {
            const int qmax = N * N;
            if (auto cx = first_diff(lemma_sum(N, H, qmax), lemma_closed(N, H, qmax),
                                     {{"N", str(N)}, {"H", str(H)}}))
                return Verdict::failed("lemma", params, *cx);
        }
    return Verdict::passed("lemma", params);
}

Verdict verify_q_pascal(int max_N)
{
    if (max_N < 1)
        throw std::invalid_argument("max_N must be at least 1");
    const ParamList params{{"max_N", str(max_N)}};
    for (int N = 1; N <= max_N; ++N) {
        const int qmax = N * N;
        const auto upper = gaussian_row(N, qmax);
        const auto lower = gaussian_row(N - 1, qmax);
        for (int H = 1; H <= N; ++H) {
            const QPoly lhs = upper[H] - lower[H - 1];
            QPoly rhs(qmax);
            if (H <= N - 1)
                rhs.add_shifted(lower[H], 1, H);
            if (auto cx = first_diff(lhs, rhs, {{"N", str(N)}, {"H", str(H)}}))
                return Verdict::failed("q_pascal", params, *cx);
        }
    }
    return Verdict::passed("q_pascal", params);
}

Verdict qbinomial_expansion(int t, int zmax, int qmax)
{
    if (t < 1)
        throw std::invalid_argument("t must be at least 1");
    require_box(zmax, qmax);
    const ParamList params{{"t", str(t)}, {"zmax", str(zmax)}, {"qmax", str(qmax)}};
    const ZQBounds box{zmax, qmax};
    const ZQSeries lhs = poch_infinite(Monomial{1, 1, t, 0}, box);
    const auto inv_fact = inv_q_factorials(zmax + 1, qmax);
    ZQSeries rhs(box);
    for (int s = 0; s <= zmax; ++s) {
        const long long e = tri(s + 1) + static_cast<long long>(s) * (t - 1);
        if (e > qmax)
            break;
        rhs.add_shifted(inv_fact[s], sign(s), s, static_cast<int>(e));
    }
    if (auto cx = first_diff(lhs, rhs, "product:sum"))
        return Verdict::failed("qbinomial_expansion", params, *cx);
    return Verdict::passed("qbinomial_expansion", params);
}

Verdict verify_zN(int max_N, int qmax)
{
    if (max_N < 1)
        throw std::invalid_argument("max_N must be at least 1");
    const ParamList params{{"max_N", str(max_N)}, {"qmax", str(qmax)}};
    for (int N = 1; N <= max_N; ++N) {
        const int q = std::max(qmax, zN_min_qmax(N));
        const QPoly left = zN_left(N, q);
        const QPoly third = zN_right_third(N, q);
        if (auto cx = first_diff(zN_right_first_two(N, q), QPoly(q), {{"N", str(N)}, {"part", "first_two"}}))
            return Verdict::failed("zN", params, *cx);
        if (auto cx = first_diff(third, left, {{"N", str(N)}, {"part", "third:left"}}))
            return Verdict::failed("zN", params, *cx);
        if (auto cx = first_diff(zN_right_third_closed(N, q), left, {{"N", str(N)}, {"part", "closed:left"}}))
            return Verdict::failed("zN", params, *cx);
    }
    return Verdict::passed("zN", params);
}

}  // namespace crankmex
