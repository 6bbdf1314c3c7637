#include "crankmex/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace crankmex {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::weight() const noexcept
{
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::largest_part() const
{
    if (parts_.empty())
        throw std::logic_error("largest part of the empty partition");
    return parts_.front();
}

int mex(const Partition& p)
{
    // parts are sorted decreasingly, so scan from the back
    int want = 1;
    auto parts = p.parts();
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
        if (*it == want)
            ++want;
        else if (*it > want)
            break;
    }
    return want;
}

int omega(const Partition& p)
{
    auto parts = p.parts();
    return static_cast<int>(std::count(parts.begin(), parts.end(), 1));
}

int eta(const Partition& p)
{
    const int w = omega(p);
    auto parts = p.parts();
    return static_cast<int>(std::count_if(parts.begin(), parts.end(), [w](int x) { return x > w; }));
}

int crank(const Partition& p)
{
    if (p.empty())
        return 0;
    const int w = omega(p);
    if (w == 0)
        return p.largest_part();
    return eta(p) - w;
}

int non_one_parts(const Partition& p)
{
    return static_cast<int>(p.size()) - omega(p);
}

class PartitionGenerator {
public:
    static void run(int n, const std::function<void(const Partition&)>& visit)
    {
        if (n < 0)
            throw std::invalid_argument("cannot partition a negative integer");
        Partition cur;
        if (n == 0) {
            visit(cur);
            return;
        }
        auto& a = cur.parts_;
        a.reserve(n);
        a.push_back(n);
        for (;;) {
            visit(cur);
            // rightmost part exceeding 1
            std::size_t ones = 0;
            while (ones < a.size() && a[a.size() - 1 - ones] == 1)
                ++ones;
            if (ones == a.size())
                return;
            std::size_t i = a.size() - 1 - ones;
            const int v = a[i] - 1;
            int rest = static_cast<int>(ones) + 1;
            a.resize(i + 1);
            a[i] = v;
            while (rest >= v) {
                a.push_back(v);
                rest -= v;
            }
            if (rest > 0)
                a.push_back(rest);
        }
    }
};

void for_each_partition(int n, const std::function<void(const Partition&)>& visit)
{
    PartitionGenerator::run(n, visit);
}

std::vector<Partition> enumerate_partitions(int n)
{
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

bool satisfies(Statistic s, const Partition& p)
{
    switch (s) {
    case Statistic::odd_mex:
        return mex(p) % 2 == 1;
    case Statistic::nonneg_crank:
        return crank(p) >= 0;
    }
    return false;
}

const char* to_string(Statistic s)
{
    return s == Statistic::odd_mex ? "odd_mex" : "nonneg_crank";
}

CountTable::CountTable(int max_n) : max_n_(max_n)
{
    if (max_n < 0)
        throw std::invalid_argument("max_n must be nonnegative");
    entries_.resize(index(max_n + 1, 0));
}

const BigInt& CountTable::at(int n, int k) const
{
    if (n < 0 || n > max_n_ || k < 0 || k > n)
        throw std::out_of_range("count table index out of range");
    return entries_[index(n, k)];
}

BigInt& CountTable::at(int n, int k)
{
    return const_cast<BigInt&>(std::as_const(*this).at(n, k));
}

BigInt CountTable::row_sum(int n) const
{
    BigInt s = 0;
    for (int k = 0; k <= n; ++k)
        s += at(n, k);
    return s;
}

std::vector<std::uint64_t> count_row(int n, Statistic s)
{
    // Enumeration cannot realistically overflow 64 bits; the table itself
    // stores exact integers.
    std::vector<std::uint64_t> row(static_cast<std::size_t>(n) + 1, 0);
    for_each_partition(n, [&](const Partition& p) {
        if (satisfies(s, p))
            ++row[non_one_parts(p)];
    });
    return row;
}

namespace {

void store_row(CountTable& t, int n, const std::vector<std::uint64_t>& row)
{
    for (int k = 0; k <= n; ++k)
        t.at(n, k) = static_cast<unsigned long>(row[k]);
}

}  // namespace

CountTable count_table_serial(int max_n, Statistic s)
{
    CountTable t(max_n);
    for (int n = 0; n <= max_n; ++n)
        store_row(t, n, count_row(n, s));
    return t;
}

CountTable count_table(int max_n, Statistic s)
{
    CountTable t(max_n);
    // largest rows first: they dominate the cost
#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i <= max_n; ++i) {
        const int n = max_n - i;
        store_row(t, n, count_row(n, s));
    }
    return t;
}

Verdict verify_theorem2(int max_n)
{
    if (max_n < 1)
        throw std::invalid_argument("verify_theorem2 needs max_n >= 1");
    ParamList params{{"max_n", std::to_string(max_n)}};
    const CountTable mex_t = count_table(max_n, Statistic::odd_mex);
    const CountTable crank_t = count_table(max_n, Statistic::nonneg_crank);
    for (int n = 1; n <= max_n; ++n)
        for (int k = 0; k <= n; ++k)
            if (mex_t.at(n, k) != crank_t.at(n, k))
                return Verdict::failed("theorem2", params,
                                       {{{"n", std::to_string(n)}, {"k", std::to_string(k)}},
                                        mex_t.at(n, k).get_str(),
                                        crank_t.at(n, k).get_str()});
    return Verdict::passed("theorem2", params);
}

Verdict verify_theorem1(int max_n)
{
    if (max_n < 1)
        throw std::invalid_argument("verify_theorem1 needs max_n >= 1");
    ParamList params{{"max_n", std::to_string(max_n)}};
    // Row totals are recounted independently of the k-split tables.
    for (int n = 1; n <= max_n; ++n) {
        std::uint64_t odd = 0, nonneg = 0;
        for_each_partition(n, [&](const Partition& p) {
            odd += mex(p) % 2 == 1;
            nonneg += crank(p) >= 0;
        });
        if (odd != nonneg)
            return Verdict::failed("theorem1", params,
                                   {{{"n", std::to_string(n)}}, std::to_string(odd), std::to_string(nonneg)});
    }
    return Verdict::passed("theorem1", params);
}

std::vector<BigInt> partition_counts(int max_n)
{
    if (max_n < 0)
        throw std::invalid_argument("max_n must be nonnegative");
    std::vector<BigInt> p(static_cast<std::size_t>(max_n) + 1);
    p[0] = 1;
    for (int n = 1; n <= max_n; ++n) {
        BigInt acc = 0;
        for (long long j = 1;; ++j) {
            const long long g1 = j * (3 * j - 1) / 2;
            if (g1 > n)
                break;
            const long long g2 = j * (3 * j + 1) / 2;
            BigInt term = p[n - g1];
            if (g2 <= n)
                term += p[n - g2];
            if (j % 2 == 1)
                acc += term;
            else
                acc -= term;
        }
        p[n] = acc;
    }
    return p;
}

BigInt partition_count(int n)
{
    return partition_counts(n).back();
}

Verdict verify_ramanujan(int max_m)
{
    if (max_m < 0)
        throw std::invalid_argument("max_m must be nonnegative");
    ParamList params{{"max_m", std::to_string(max_m)}};
    const auto p = partition_counts(11 * max_m + 6);
    for (int m = 0; m <= max_m; ++m) {
        const BigInt& v = p[11 * m + 6];
        if (v % 11 != 0) {
            BigInt r = v % 11;
            return Verdict::failed("ramanujan", params,
                                   {{{"m", std::to_string(m)}, {"p", v.get_str()}}, r.get_str(), "0"});
        }
    }
    return Verdict::passed("ramanujan", params);
}

Verdict verify_partition_count(int max_n)
{
    if (max_n < 0)
        throw std::invalid_argument("max_n must be nonnegative");
    ParamList params{{"max_n", std::to_string(max_n)}};
    const auto p = partition_counts(max_n);
    for (int n = 0; n <= max_n; ++n) {
        std::uint64_t count = 0;
        for_each_partition(n, [&](const Partition&) { ++count; });
        if (BigInt(static_cast<unsigned long>(count)) != p[n])
            return Verdict::failed("partition_count", params,
                                   {{{"n", std::to_string(n)}}, std::to_string(count), p[n].get_str()});
    }
    return Verdict::passed("partition_count", params);
}

}  // namespace crankmex
