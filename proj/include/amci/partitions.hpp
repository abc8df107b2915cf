#pragma once

#include <array>
#include <compare>
#include <vector>

namespace amci {

// Partition of an integer into at most three parts (a,b,c), a >= b >= c >= 0,
// with every part bounded by some limit l.
struct Partition {
  std::array<int, 3> parts{0, 0, 0};

  int weight() const { return parts[0] + parts[1] + parts[2]; }
  bool is_strict() const { return parts[0] > parts[1] && parts[1] > parts[2]; }
  bool is_two_strict() const {
    return parts[0] >= parts[1] + 2 && parts[1] >= parts[2] + 2;
  }

  auto operator<=>(const Partition&) const = default;
};

enum class PartitionClass { Plain, Strict, TwoStrict };

// All partitions of j into at most k parts bounded by l, in descending
// lexicographic order on (a,b,c).  Only k == 3 is supported; anything else is
// rejected as an unsupported rank.  Empty for j < 0 or j > k*l.
std::vector<Partition> enumerate_partitions(int k, int l, int j,
                                            PartitionClass cls = PartitionClass::Plain);

long long count_partitions(int k, int l, int j,
                           PartitionClass cls = PartitionClass::Plain);

// Subtract the staircase (2,1,0).  Maps strict partitions bounded by l onto
// plain partitions bounded by l-2, and two-strict onto strict, weight j -> j-3.
Partition staircase_reduce(const Partition& lam, PartitionClass cls);

// The partitions of j bounded by d-1 obtainable from mu by incrementing one
// part: candidates mu + e_i that are again weakly decreasing with parts
// <= d-1.  mu must be a partition of j-1 bounded by d-1.
std::vector<Partition> successor_cover(const Partition& mu, int d, int j);

}  // namespace amci
