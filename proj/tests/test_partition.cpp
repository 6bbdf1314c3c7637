#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <vector>

#include "crankmex/partition.hpp"

using namespace crankmex;

namespace {

// Independent enumeration oracle: recursive, largest part first.
void oracle_partitions(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        oracle_partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> oracle_partitions(int n)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    oracle_partitions(n, n, cur, out);
    return out;
}

std::vector<int> as_vector(const Partition& p)
{
    return {p.parts().begin(), p.parts().end()};
}

}  // namespace

TEST_CASE("partition construction validates parts")
{
    CHECK_NOTHROW(Partition{3, 3, 1});
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Partition().largest_part(), std::logic_error);
    CHECK(Partition{4, 2, 1}.weight() == 7);
    CHECK(Partition{4, 2, 1}.largest_part() == 4);
}

TEST_CASE("enumerate_partitions small cases")
{
    auto p0 = enumerate_partitions(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].empty());

    auto p1 = enumerate_partitions(1);
    REQUIRE(p1.size() == 1);
    CHECK(p1[0] == Partition{1});

    const std::vector<Partition> want{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
    CHECK(enumerate_partitions(4) == want);
}

TEST_CASE("enumeration matches the recursive oracle in order and content")
{
    for (int n = 0; n <= 18; ++n) {
        const auto got = enumerate_partitions(n);
        const auto want = oracle_partitions(n);
        REQUIRE(got.size() == want.size());
        for (std::size_t i = 0; i < got.size(); ++i)
            REQUIRE(as_vector(got[i]) == want[i]);
    }
}

TEST_CASE("enumeration is duplicate free, weight-preserving, and counted by p(n)")
{
    const auto p = partition_counts(30);
    for (int n = 0; n <= 30; ++n) {
        std::set<std::vector<int>> seen;
        std::uint64_t count = 0;
        for_each_partition(n, [&](const Partition& pi) {
            CHECK(pi.weight() == n);
            seen.insert(as_vector(pi));
            ++count;
        });
        CHECK(seen.size() == count);
        CHECK(BigInt(static_cast<unsigned long>(count)) == p[n]);
    }
}

TEST_CASE("statistics on the worked examples")
{
    CHECK(mex(Partition{}) == 1);
    CHECK(mex(Partition{2, 1, 1}) == 3);
    CHECK(mex(Partition{4}) == 1);
    CHECK(mex(Partition{3, 2, 1}) == 4);
    CHECK(mex(Partition{3, 1}) == 2);

    CHECK(omega(Partition{}) == 0);
    CHECK(omega(Partition{1, 1, 1, 1}) == 4);
    CHECK(omega(Partition{3, 1}) == 1);

    CHECK(eta(Partition{}) == 0);
    CHECK(eta(Partition{3, 1}) == 1);
    CHECK(eta(Partition{2, 1, 1}) == 0);

    CHECK(crank(Partition{4}) == 4);
    CHECK(crank(Partition{3, 1}) == 0);
    CHECK(crank(Partition{1, 1, 1, 1}) == -4);
    CHECK(crank(Partition{}) == 0);
    CHECK(crank(Partition{1}) == -1);

    CHECK(non_one_parts(Partition{}) == 0);
    CHECK(non_one_parts(Partition{2, 2}) == 2);
    CHECK(non_one_parts(Partition{2, 1, 1}) == 1);
}

TEST_CASE("statistic properties over all partitions up to 20")
{
    for (int n = 0; n <= 20; ++n)
        for_each_partition(n, [&](const Partition& p) {
            const int w = omega(p);
            CHECK((mex(p) == 1) == (w == 0));
            CHECK((mex(p) >= 2) == (w > 0));
            CHECK(non_one_parts(p) + w == static_cast<int>(p.size()));
            if (w > 0)
                CHECK(crank(p) == eta(p) - w);
            else if (!p.empty())
                CHECK(crank(p) == p.largest_part());
            // brute-force mex
            int m = 1;
            while (std::find(p.parts().begin(), p.parts().end(), m) != p.parts().end())
                ++m;
            CHECK(mex(p) == m);
        });
}

TEST_CASE("count_table worked examples")
{
    const CountTable mex_t = count_table(4, Statistic::odd_mex);
    CHECK(mex_t.at(4, 0) == 0);
    CHECK(mex_t.at(4, 1) == 2);
    CHECK(mex_t.at(4, 2) == 1);
    CHECK(mex_t.at(4, 3) == 0);
    CHECK(mex_t.at(4, 4) == 0);

    const CountTable crank_t = count_table(4, Statistic::nonneg_crank);
    CHECK(crank_t.at(4, 1) == 2);
    CHECK(crank_t.at(4, 2) == 1);
    CHECK(crank_t.at(4, 0) == 0);

    const CountTable zero = count_table(0, Statistic::odd_mex);
    CHECK(zero.at(0, 0) == 1);
    CHECK_THROWS_AS(zero.at(1, 0), std::out_of_range);
    CHECK_THROWS_AS(mex_t.at(2, 3), std::out_of_range);
}

TEST_CASE("count_table row sums are bounded by p(n) and match direct counts")
{
    const int max_n = 25;
    const auto p = partition_counts(max_n);
    const CountTable mex_t = count_table(max_n, Statistic::odd_mex);
    const CountTable crank_t = count_table(max_n, Statistic::nonneg_crank);
    for (int n = 0; n <= max_n; ++n) {
        std::uint64_t odd = 0, nonneg = 0;
        for_each_partition(n, [&](const Partition& pi) {
            odd += mex(pi) % 2 == 1;
            nonneg += crank(pi) >= 0;
        });
        CHECK(mex_t.row_sum(n) == BigInt(static_cast<unsigned long>(odd)));
        CHECK(crank_t.row_sum(n) == BigInt(static_cast<unsigned long>(nonneg)));
        CHECK(mex_t.row_sum(n) <= p[n]);
        if (n >= 1)
            CHECK(mex_t.row_sum(n) == crank_t.row_sum(n));
    }
}

TEST_CASE("verify_theorem2 small ranges")
{
    CHECK(verify_theorem2(1).pass);
    CHECK(verify_theorem2(4).pass);
    CHECK(verify_theorem2(25).pass);
    CHECK_THROWS_AS(verify_theorem2(0), std::invalid_argument);
    CHECK(verify_theorem1(25).pass);
    // n = 1: {1} has mex 2 and crank -1, so both rows are empty
    const CountTable t = count_table(1, Statistic::nonneg_crank);
    CHECK(t.at(1, 0) == 0);
    CHECK(t.at(1, 1) == 0);
}

TEST_CASE("partition_count")
{
    CHECK(partition_count(0) == 1);
    CHECK(partition_count(4) == 5);
    CHECK(partition_count(6) == 11);
    CHECK(partition_count(17) == 297);
    CHECK(partition_count(100) == BigInt("190569292"));
    CHECK(partition_count(200) == BigInt("3972999029388"));
    CHECK(verify_partition_count(30).pass);
}

TEST_CASE("verify_ramanujan")
{
    CHECK(verify_ramanujan(0).pass);
    CHECK(verify_ramanujan(1).pass);
    CHECK(verify_ramanujan(8).pass);
    CHECK(verify_ramanujan(30).pass);
    CHECK_THROWS_AS(verify_ramanujan(-1), std::invalid_argument);
}
