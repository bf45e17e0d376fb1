#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qlab/rational.hpp"

namespace qlab {

struct Partition {
  std::vector<int> parts;  // weakly decreasing
  int n = 0;

  Partition() = default;
  explicit Partition(std::vector<int> parts);  // sorts descending, validates positivity

  bool empty() const { return parts.empty(); }
  int largest() const { return parts.empty() ? 0 : parts.front(); }
  int smallest() const { return parts.empty() ? 0 : parts.back(); }
  int length() const { return static_cast<int>(parts.size()); }
  friend bool operator==(const Partition&, const Partition&) = default;
};

// Self-conjugate S-partition: pi2 == pi3 is stored once.
struct SPartitionTriple {
  Partition pi1;  // distinct parts, nonempty
  Partition pi2;
  Partition pi3;
  int weight = 1;  // (-1)^{#pi1 - 1}
};

// Visits every partition of n with largest part <= max_part in descending
// lexicographic order. The callback sees a reused buffer.
void for_each_partition(int n, std::optional<int> max_part,
                        const std::function<void(const std::vector<int>&)>& visit);
std::vector<Partition> enumerate_partitions(int n, std::optional<int> max_part = std::nullopt);

std::int64_t partition_count(int n, std::optional<int> max_part = std::nullopt);
std::int64_t spt(int n, std::optional<int> max_part = std::nullopt);

int rank(const Partition& p);
int crank(const Partition& p);

enum class Statistic { Rank, Crank };

// k -> number of partitions of n with the given statistic k.
std::map<int, std::int64_t> statistic_distribution(Statistic kind, int n);

BigInteger moment(Statistic kind, int j, int n, bool positive_only);

// Throws AnomalousInput at n = 1, where the combinatorial crank disagrees
// with the generating function.
BigInteger ospt(int n);

// Weighted count of self-conjugate S-partitions of n; s(empty) = +infinity.
std::int64_t n_sc(int n);
std::vector<SPartitionTriple> self_conjugate_s_partitions(int n);

// Sum of the largest part over overpartitions of n whose largest part is
// overlined, each overpartition counted once.
std::int64_t overlined_largest_sum(int n);

struct StatisticRow {
  int n = 0;
  std::optional<int> N;
  BigInteger value;
};

struct StatisticTable {
  std::string statistic;
  std::vector<StatisticRow> rows;
};

struct TableOptions {
  int max_n = 10;
  std::optional<int> N;  // required for the restricted statistics
  int j = 2;             // moment order
  bool positive_only = false;
};

const std::vector<std::string>& statistic_names();
// Throws std::invalid_argument for an unknown name or a missing N.
StatisticTable statistic_table(std::string_view statistic, const TableOptions& options);

}  // namespace qlab
