#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "crankmex/bigint.hpp"
#include "crankmex/verdict.hpp"

namespace crankmex {

/// A partition: weakly decreasing positive parts. The empty partition is
/// the unique partition of 0.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless parts are positive and weakly
    /// decreasing.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    std::span<const int> parts() const noexcept { return parts_; }
    std::size_t size() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int weight() const noexcept;
    /// Largest part. Throws std::logic_error on the empty partition.
    int largest_part() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    friend class PartitionGenerator;
    std::vector<int> parts_;
};

/// Least positive integer that is not a part.
int mex(const Partition& p);
/// Number of parts equal to 1.
int omega(const Partition& p);
/// Number of parts strictly greater than omega(p).
int eta(const Partition& p);
/// Largest part when there are no ones, eta - omega otherwise; 0 for the
/// empty partition.
int crank(const Partition& p);
/// Number of parts greater than 1.
int non_one_parts(const Partition& p);

/// Visits the partitions of n in decreasing lexicographic order. The
/// reference handed to the visitor is only valid during the call.
void for_each_partition(int n, const std::function<void(const Partition&)>& visit);

/// All partitions of n, decreasing lexicographic order.
std::vector<Partition> enumerate_partitions(int n);

enum class Statistic { odd_mex, nonneg_crank };

bool satisfies(Statistic s, const Partition& p);
const char* to_string(Statistic s);

/// entries(n, k) for 0 <= k <= n <= max_n: number of partitions of n
/// satisfying a predicate with exactly k parts greater than 1.
class CountTable {
public:
    explicit CountTable(int max_n);

    int max_n() const noexcept { return max_n_; }
    const BigInt& at(int n, int k) const;
    BigInt& at(int n, int k);
    BigInt row_sum(int n) const;

    friend bool operator==(const CountTable&, const CountTable&) = default;

private:
    static std::size_t index(int n, int k) noexcept {
        return static_cast<std::size_t>(n) * (n + 1) / 2 + k;
    }
    int max_n_;
    std::vector<BigInt> entries_;
};

/// Full-enumeration table; rows are computed in parallel.
CountTable count_table(int max_n, Statistic s);
/// Sequential reference for count_table.
CountTable count_table_serial(int max_n, Statistic s);

/// Per-row counts of one partition size, indexed by k.
std::vector<std::uint64_t> count_row(int n, Statistic s);

/// Entrywise equality of the odd-mex and nonneg-crank tables for
/// 1 <= n <= max_n.
Verdict verify_theorem2(int max_n);
/// Row sums of the two tables agree for 1 <= n <= max_n.
Verdict verify_theorem1(int max_n);

/// p(0..max_n) by the pentagonal-number recurrence.
std::vector<BigInt> partition_counts(int max_n);
BigInt partition_count(int n);

/// p(11m+6) = 0 mod 11 for 0 <= m <= max_m.
Verdict verify_ramanujan(int max_m);
/// Enumeration length equals the recurrence for 0 <= n <= max_n.
Verdict verify_partition_count(int max_n);

}  // namespace crankmex
