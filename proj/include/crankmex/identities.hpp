#pragma once

// Generating functions for odd-mex and nonnegative-crank partitions counted
// by parts greater than one, the crank generating function, and the
// coefficient identities that prove their equality. Every builder is exact
// inside its truncation box; each infinite sum is cut as soon as the
// smallest q-power of the next summand is beyond qmax.

#include "crankmex/partition.hpp"
#include "crankmex/series.hpp"
#include "crankmex/verdict.hpp"

namespace crankmex {

/// 1/(zq^2;q)_inf + sum_{n>=1} z^{2n-1} q^{1+2+...+2n} (1 - z q^{2n+1})
///                  / ((1-q)(zq^2;q)_inf)
/// Summand n generates the partitions with mex 2n+1.
ZQSeries build_M_structural(int zmax, int qmax);
/// (1 + sum_{n>=2} (-1)^n z^{n-1} q^{binom(n+1,2)} / (1-q)) / (zq^2;q)_inf
ZQSeries build_M_closed(int zmax, int qmax);
/// (1-zq) + sum_{n>=1} z q^n/(zq^2;q)_{n-1}
///   + sum_{n>=1,m>=0} q^{n+(m+n)(n+1)} z^{m+n} / ((zq^2;q)_{n-1} (q;q)_{m+n})
ZQSeries build_K(int zmax, int qmax);

// Both sides of M = K after clearing the common denominator (zq^2;q)_inf.

/// 1 + sum_{n>=2} (-1)^n z^{n-1} q^{binom(n+1,2)} / (1-q)
ZQSeries cleared_left(int zmax, int qmax);
/// (zq;q)_inf + sum_{n>=1} z q^n (zq^{n+1};q)_inf
///   + sum_{n>=1,m>=0} q^{n+(m+n)(n+1)} z^{m+n} (zq^{n+1};q)_inf / (q;q)_{m+n}
ZQSeries cleared_right_products(int zmax, int qmax);
/// The same right side with each infinite product replaced by its
/// q-binomial expansion.
ZQSeries cleared_right_expanded(int zmax, int qmax);

/// (q;q)_inf / ((yq;q)_inf (q/y;q)_inf); the y-exponent tracks the crank.
YQSeries crank_gf_product(int qmax);
/// (1-q) + sum_{n>=1} y^n q^n/(q^2;q)_{n-1}
///   + sum_{n>=1} q^n y^{-n}/(q^2;q)_{n-1} sum_{m>=0} y^m q^{m(n+1)}/(q;q)_m
YQSeries crank_gf_expanded(int qmax);

/// sum_{m=0}^{H} (-1)^m q^{binom(m,2)} [N choose m]
QPoly lemma_sum(int N, int H, int qmax);
/// (-1)^H q^{binom(H+1,2)} [N-1 choose H]
QPoly lemma_closed(int N, int H, int qmax);

/// (-1)^{N+1} q^{binom(N+2,2)} / (1-q)
QPoly zN_left(int N, int qmax);
/// z^N coefficient of the first two right-hand terms; identically zero.
QPoly zN_right_first_two(int N, int qmax);
/// z^N coefficient of the third right-hand term, as a double sum over n, m.
QPoly zN_right_third(int N, int qmax);
/// (-1)^{N-1} q^{binom(N+1,2)+N} / (q;q)_N * q (q^2;q)_{N-1}
QPoly zN_right_third_closed(int N, int qmax);

/// Smallest qmax accepted by zN_right_third.
int zN_min_qmax(int N);

// Verdicts. Names are stable identifiers used in reports.

Verdict verify_M_equals_K(int zmax, int qmax);
/// M and K coefficients against enumeration counts for 0 <= n <= max_n.
Verdict verify_series_oracle(int max_n);
/// cleared_left = M_closed * (zq^2;q)_inf = both cleared right sides.
Verdict verify_cleared_forms(int zmax, int qmax);
Verdict verify_crank_gf(int qmax);
/// The q^1 coefficients of crank_gf_product are exactly y^-1 - 1 + y.
Verdict verify_crank_anomaly(int qmax);
Verdict verify_crank_distribution(int n_low, int n_high, int qmax);
Verdict verify_lemma(int max_N);
/// q-Pascal step [N,H] - [N-1,H-1] = q^H [N-1,H] for 1 <= H <= N <= max_N.
Verdict verify_q_pascal(int max_N);
Verdict qbinomial_expansion(int t, int zmax, int qmax);
/// For 1 <= N <= max_N, at qmax_N = max(qmax, zN_min_qmax(N)): the first two
/// terms vanish, the third equals the left side and its closed form.
Verdict verify_zN(int max_N, int qmax = 0);

}  // namespace crankmex
