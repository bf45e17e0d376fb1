#include "qlab/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "qlab/errors.hpp"

namespace qlab {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  if (std::any_of(parts.begin(), parts.end(), [](int x) { return x <= 0; })) {
    throw std::invalid_argument("partition parts must be positive");
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  n = std::accumulate(parts.begin(), parts.end(), 0);
}

void for_each_partition(int n, std::optional<int> max_part,
                        const std::function<void(const std::vector<int>&)>& visit) {
  if (n < 0) throw std::invalid_argument("cannot partition a negative integer");
  const int cap = max_part ? std::min(*max_part, n) : n;
  std::vector<int> parts;
  if (n == 0) {
    visit(parts);
    return;
  }
  if (cap <= 0) return;

  // Greedy fill under a bound, then repeatedly lower the last part > 1.
  auto fill = [&parts](int remaining, int bound) {
    while (remaining > 0) {
      const int x = std::min(bound, remaining);
      parts.push_back(x);
      remaining -= x;
    }
  };
  fill(n, cap);
  for (;;) {
    visit(parts);
    int ones = 0;
    while (!parts.empty() && parts.back() == 1) {
      parts.pop_back();
      ++ones;
    }
    if (parts.empty()) return;
    const int x = --parts.back();
    fill(ones + 1, x);
  }
}

std::vector<Partition> enumerate_partitions(int n, std::optional<int> max_part) {
  std::vector<Partition> out;
  for_each_partition(n, max_part, [&out](const std::vector<int>& p) {
    Partition part;
    part.parts = p;
    part.n = std::accumulate(p.begin(), p.end(), 0);
    out.push_back(std::move(part));
  });
  return out;
}

std::int64_t partition_count(int n, std::optional<int> max_part) {
  std::int64_t count = 0;
  for_each_partition(n, max_part, [&count](const std::vector<int>&) { ++count; });
  return count;
}

std::int64_t spt(int n, std::optional<int> max_part) {
  if (n < 1) throw std::invalid_argument("spt needs n >= 1");
  std::int64_t total = 0;
  for_each_partition(n, max_part, [&total](const std::vector<int>& p) {
    const int s = p.back();
    total += std::count(p.begin(), p.end(), s);
  });
  return total;
}

namespace {

int rank_of(const std::vector<int>& p) { return p.front() - static_cast<int>(p.size()); }

int crank_of(const std::vector<int>& p) {
  const int ones = static_cast<int>(std::count(p.begin(), p.end(), 1));
  if (ones == 0) return p.front();
  const int larger = static_cast<int>(std::count_if(p.begin(), p.end(), [ones](int x) { return x > ones; }));
  return larger - ones;
}

int statistic_of(Statistic kind, const std::vector<int>& p) {
  return kind == Statistic::Rank ? rank_of(p) : crank_of(p);
}

}  // namespace

int rank(const Partition& p) {
  if (p.empty()) throw EmptyPartition("rank of the empty partition");
  return rank_of(p.parts);
}

int crank(const Partition& p) {
  if (p.empty()) throw EmptyPartition("crank of the empty partition");
  return crank_of(p.parts);
}

std::map<int, std::int64_t> statistic_distribution(Statistic kind, int n) {
  if (n < 1) throw std::invalid_argument("statistic distribution needs n >= 1");
  std::map<int, std::int64_t> counts;
  for_each_partition(n, std::nullopt,
                     [&](const std::vector<int>& p) { ++counts[statistic_of(kind, p)]; });
  return counts;
}

BigInteger moment(Statistic kind, int j, int n, bool positive_only) {
  if (n < 1) throw std::invalid_argument("moment needs n >= 1");
  if (j < 0) throw std::invalid_argument("moment order must be non-negative");
  BigInteger total = 0;
  BigInteger power;
  for (const auto& [k, count] : statistic_distribution(kind, n)) {
    if (positive_only && k < 1) continue;
    mpz_pow_ui(power.get_mpz_t(), BigInteger(k).get_mpz_t(), static_cast<unsigned long>(j));
    total += power * BigInteger(static_cast<long>(count));
  }
  return total;
}

BigInteger ospt(int n) {
  if (n == 1) {
    throw AnomalousInput("ospt(1): the crank of (1) differs from the generating-function convention");
  }
  if (n < 2) throw std::invalid_argument("ospt needs n >= 2");
  return moment(Statistic::Crank, 1, n, true) - moment(Statistic::Rank, 1, n, true);
}

namespace {

// Partitions of n into distinct parts, descending.
void for_each_distinct_partition(int n, int cap, std::vector<int>& parts,
                                 const std::function<void(const std::vector<int>&)>& visit) {
  if (n == 0) {
    visit(parts);
    return;
  }
  for (int x = std::min(n, cap); x >= 1; --x) {
    parts.push_back(x);
    for_each_distinct_partition(n - x, x - 1, parts, visit);
    parts.pop_back();
  }
}

}  // namespace

std::vector<SPartitionTriple> self_conjugate_s_partitions(int n) {
  if (n < 1) throw std::invalid_argument("S-partitions need n >= 1");
  std::vector<SPartitionTriple> out;
  std::vector<int> buffer;
  for (int m = n; m >= 1; --m) {
    if ((n - m) % 2 != 0) continue;
    const int half = (n - m) / 2;
    for_each_distinct_partition(m, m, buffer, [&](const std::vector<int>& pi1) {
      const int s1 = pi1.back();
      for_each_partition(half, std::nullopt, [&](const std::vector<int>& pi2) {
        // s(pi1) <= s(pi2), with s(empty) = +infinity.
        if (!pi2.empty() && pi2.back() < s1) return;
        SPartitionTriple t;
        t.pi1 = Partition(pi1);
        t.pi2 = Partition(pi2);
        t.pi3 = t.pi2;
        t.weight = (pi1.size() % 2 == 1) ? 1 : -1;
        out.push_back(std::move(t));
      });
    });
  }
  return out;
}

std::int64_t n_sc(int n) {
  std::int64_t total = 0;
  for (const auto& t : self_conjugate_s_partitions(n)) total += t.weight;
  return total;
}

std::int64_t overlined_largest_sum(int n) {
  if (n < 1) throw std::invalid_argument("overlined_largest_sum needs n >= 1");
  std::int64_t total = 0;
  for_each_partition(n, std::nullopt, [&total](const std::vector<int>& p) {
    std::vector<int> sizes(p.begin(), p.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
    // sizes[0] is the largest part and is always overlined; every other
    // distinct size may or may not carry an overline.
    const std::uint64_t choices = std::uint64_t{1} << (sizes.size() - 1);
    for (std::uint64_t mask = 0; mask < choices; ++mask) total += sizes.front();
  });
  return total;
}

const std::vector<std::string>& statistic_names() {
  static const std::vector<std::string> names{
      "p",           "p_restricted", "spt",  "spt_restricted",       "rank_moment",
      "crank_moment", "ospt",        "n_sc", "overlined_largest_sum"};
  return names;
}

StatisticTable statistic_table(std::string_view statistic, const TableOptions& options) {
  const auto& names = statistic_names();
  if (std::find(names.begin(), names.end(), statistic) == names.end()) {
    throw std::invalid_argument("unknown statistic '" + std::string(statistic) + "'");
  }
  const bool restricted = statistic == "p_restricted" || statistic == "spt_restricted";
  if (restricted && !options.N) {
    throw std::invalid_argument("statistic '" + std::string(statistic) + "' needs N");
  }
  if (options.max_n < 0) throw std::invalid_argument("max_n must be non-negative");

  StatisticTable table{std::string(statistic), {}};
  const int first = statistic == "p" || statistic == "p_restricted" ? 0
                    : statistic == "ospt"                           ? 2
                                                                    : 1;
  for (int n = first; n <= options.max_n; ++n) {
    StatisticRow row{n, restricted ? options.N : std::nullopt, 0};
    if (statistic == "p") {
      row.value = static_cast<long>(partition_count(n));
    } else if (statistic == "p_restricted") {
      row.value = static_cast<long>(partition_count(n, options.N));
    } else if (statistic == "spt") {
      row.value = static_cast<long>(spt(n));
    } else if (statistic == "spt_restricted") {
      row.value = static_cast<long>(spt(n, options.N));
    } else if (statistic == "rank_moment") {
      row.value = moment(Statistic::Rank, options.j, n, options.positive_only);
    } else if (statistic == "crank_moment") {
      row.value = moment(Statistic::Crank, options.j, n, options.positive_only);
    } else if (statistic == "ospt") {
      row.value = ospt(n);
    } else if (statistic == "n_sc") {
      row.value = static_cast<long>(n_sc(n));
    } else {
      row.value = static_cast<long>(overlined_largest_sum(n));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace qlab
