#include <doctest.h>

#include <map>
#include <stdexcept>

#include "crankmex/identities.hpp"

using namespace crankmex;

namespace {

QPoly qpoly(int qmax, std::vector<long> coeffs, int shift = 0)
{
    QPoly p(qmax);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        p.add_term(static_cast<int>(i) + shift, coeffs[i]);
    return p;
}

}  // namespace

TEST_CASE("M structural form, low coefficients")
{
    const ZQSeries m = build_M_structural(8, 8);
    CHECK(m.coeff(0, 0) == 1);
    CHECK(m.coeff(0, 1) == 0);
    CHECK(m.coeff(1, 2) == 1);
    CHECK(m.coeff(1, 4) == 2);
    CHECK(m.coeff(2, 4) == 1);
    CHECK_THROWS_AS(build_M_structural(0, 5), std::invalid_argument);
}

TEST_CASE("M closed form")
{
    const ZQSeries m = build_M_closed(8, 8);
    CHECK(m.coeff(0, 0) == 1);
    CHECK(m.coeff(1, 2) == 1);
    CHECK(build_M_closed(30, 30) == build_M_structural(30, 30));
    CHECK(build_M_closed(7, 19) == build_M_structural(7, 19));
}

TEST_CASE("K")
{
    const ZQSeries k = build_K(8, 8);
    CHECK(k.coeff(0, 0) == 1);
    CHECK(k.coeff(1, 1) == 0);
    CHECK(k.coeff(1, 4) == 2);
    CHECK(k.coeff(2, 4) == 1);
    // the (1 - zq) term cancels against the n = 1 term of the first sum
    ZQSeries without(8, 8);
    without.add_term(1, 1, 1);
    CHECK(k.coeff(1, 1) == -1 + without.coeff(1, 1));
}

TEST_CASE("M = K on several boxes")
{
    CHECK(verify_M_equals_K(1, 1).pass);
    const ZQSeries one_box = build_K(1, 1);
    CHECK(one_box.coeff(0, 0) == 1);
    CHECK(one_box.coeff(1, 0) == 0);
    CHECK(one_box.coeff(0, 1) == 0);
    CHECK(one_box.coeff(1, 1) == 0);
    CHECK(verify_M_equals_K(30, 30).pass);
    CHECK(verify_M_equals_K(5, 40).pass);
    CHECK(verify_M_equals_K(40, 12).pass);
}

TEST_CASE("series coefficients equal enumeration counts")
{
    CHECK(verify_series_oracle(0).pass);
    CHECK(verify_series_oracle(24).pass);
}

TEST_CASE("cleared denominators")
{
    CHECK(verify_cleared_forms(20, 20).pass);
    CHECK(verify_cleared_forms(6, 35).pass);
    CHECK(cleared_left(20, 20) == build_K(20, 20) * poch_infinite(Monomial{1, 1, 2, 0}, ZQBounds{20, 20}));
}

TEST_CASE("crank generating function, product form")
{
    const YQSeries g = crank_gf_product(10);
    CHECK(g.coeff(0, 0) == 1);
    CHECK(g.coeff(-1, 1) == 1);
    CHECK(g.coeff(0, 1) == -1);
    CHECK(g.coeff(1, 1) == 1);
    BigInt nonneg = 0;
    for (int c = 0; c <= 10; ++c)
        nonneg += g.coeff(c, 4);
    CHECK(nonneg == 3);
    CHECK_THROWS_AS(crank_gf_product(0), std::invalid_argument);
}

TEST_CASE("crank generating function, expanded form")
{
    const YQSeries g = crank_gf_expanded(10);
    CHECK(g.coeff(0, 0) == 1);
    CHECK(g.coeff(-2, 2) == 1);
    CHECK(g.coeff(-3, 3) == 1);
    CHECK(g == crank_gf_product(10));
    CHECK(verify_crank_gf(30).pass);
    CHECK(verify_crank_anomaly(5).pass);
}

TEST_CASE("crank distribution against enumeration")
{
    CHECK(verify_crank_distribution(2, 10, 10).pass);
    CHECK(verify_crank_distribution(2, 25, 30).pass);
    CHECK_THROWS_AS(verify_crank_distribution(1, 10, 10), std::invalid_argument);
    CHECK_THROWS_AS(verify_crank_distribution(2, 11, 10), std::invalid_argument);

    // n = 1 is the exception: enumeration gives crank -1 only
    std::map<int, int> by_crank;
    for_each_partition(1, [&](const Partition& p) { ++by_crank[crank(p)]; });
    CHECK(by_crank == std::map<int, int>{{-1, 1}});
}

TEST_CASE("lemma sides")
{
    CHECK(lemma_sum(5, 0, 25) == QPoly::one(25));
    CHECK(lemma_closed(5, 0, 25) == QPoly::one(25));
    CHECK(lemma_sum(2, 1, 4) == qpoly(4, {0, -1}));
    CHECK(lemma_closed(2, 1, 4) == qpoly(4, {0, -1}));
    CHECK(lemma_sum(3, 3, 9).is_zero());
    CHECK(lemma_closed(3, 3, 9).is_zero());
    CHECK(lemma_closed(4, 2, 16) == qpoly(16, {1, 1, 1}, 3));
    CHECK(lemma_sum(4, 2, 16) == qpoly(16, {1, 1, 1}, 3));

    CHECK_THROWS_AS(lemma_sum(3, 4, 9), std::invalid_argument);
    CHECK_THROWS_AS(lemma_closed(3, -1, 9), std::invalid_argument);
    CHECK_THROWS_AS(lemma_sum(3, 1, 8), std::invalid_argument);
    CHECK_THROWS_AS(lemma_sum(0, 0, 9), std::invalid_argument);

    CHECK(verify_lemma(1).pass);
    CHECK(verify_lemma(5).pass);
    CHECK(verify_lemma(15).pass);
    CHECK(verify_q_pascal(20).pass);
}

TEST_CASE("q-binomial expansion of (zq^t;q)_inf")
{
    CHECK(qbinomial_expansion(1, 20, 20).pass);
    CHECK(qbinomial_expansion(2, 20, 20).pass);
    CHECK(qbinomial_expansion(7, 9, 30).pass);
    const ZQSeries p = poch_infinite(Monomial{1, 1, 1, 0}, ZQBounds{20, 20});
    CHECK(p.row(0) == QPoly::one(20));
    CHECK_THROWS_AS(qbinomial_expansion(0, 5, 5), std::invalid_argument);
}

TEST_CASE("z^N coefficient, left side")
{
    CHECK(zN_left(1, 5) == qpoly(5, {1, 1, 1}, 3));
    CHECK(zN_left(2, 7) == qpoly(7, {-1, -1}, 6));
    for (int N = 1; N <= 10; ++N) {
        const QPoly p = zN_left(N, zN_min_qmax(N));
        int low = 0;
        while (p.coeff(low) == 0)
            ++low;
        CHECK(low == tri(N + 2));
    }
    CHECK_THROWS_AS(zN_left(2, 5), std::invalid_argument);
}

TEST_CASE("z^N coefficient, right side")
{
    CHECK(zN_right_first_two(1, 20).is_zero());
    CHECK(zN_right_first_two(2, 20).is_zero());
    CHECK(zN_right_first_two(10, 80).is_zero());

    CHECK(zN_right_third(1, zN_min_qmax(1)) == zN_left(1, zN_min_qmax(1)));
    CHECK(zN_right_third(2, 30) == zN_left(2, 30));
    CHECK(zN_right_third(5, 60) == zN_left(5, 60));
    for (int N = 1; N <= 8; ++N) {
        const int q = zN_min_qmax(N) + 5;
        CHECK(zN_right_third_closed(N, q) == zN_left(N, q));
    }
    CHECK_THROWS_AS(zN_right_third(3, zN_min_qmax(3) - 1), std::invalid_argument);
    CHECK(verify_zN(12).pass);
    CHECK(verify_zN(4, 100).pass);
}
