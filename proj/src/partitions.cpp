#include "amci/partitions.hpp"

#include <algorithm>
#include <stdexcept>

namespace amci {

namespace {

bool in_class(const Partition& p, PartitionClass cls) {
  switch (cls) {
    case PartitionClass::Plain:
      return true;
    case PartitionClass::Strict:
      return p.is_strict();
    case PartitionClass::TwoStrict:
      return p.is_two_strict();
  }
  return false;
}

void require_rank3(int k) {
  if (k != 3) throw std::invalid_argument("only partitions into at most 3 parts are supported");
}

}  // namespace

std::vector<Partition> enumerate_partitions(int k, int l, int j, PartitionClass cls) {
  require_rank3(k);
  std::vector<Partition> out;
  if (l < 0 || j < 0 || j > 3 * l) return out;
  for (int a = std::min(l, j); 3 * a >= j; --a) {
    int rest = j - a;
    for (int b = std::min(a, rest); 2 * b >= rest; --b) {
      int c = rest - b;
      Partition p{{a, b, c}};
      if (in_class(p, cls)) out.push_back(p);
    }
  }
  return out;
}

long long count_partitions(int k, int l, int j, PartitionClass cls) {
  require_rank3(k);
  if (l < 0 || j < 0 || j > 3 * l) return 0;
  long long n = 0;
  for (int a = std::min(l, j); 3 * a >= j; --a) {
    int rest = j - a;
    for (int b = std::min(a, rest); 2 * b >= rest; --b)
      if (in_class(Partition{{a, b, rest - b}}, cls)) ++n;
  }
  return n;
}

Partition staircase_reduce(const Partition& lam, PartitionClass cls) {
  if (cls == PartitionClass::Plain)
    throw std::invalid_argument("staircase_reduce needs a strict or two-strict partition");
  if (!in_class(lam, cls))
    throw std::invalid_argument("partition is not in the stated class");
  return Partition{{lam.parts[0] - 2, lam.parts[1] - 1, lam.parts[2]}};
}

std::vector<Partition> successor_cover(const Partition& mu, int d, int j) {
  if (mu.weight() != j - 1)
    throw std::invalid_argument("successor_cover: mu must have weight j-1");
  std::vector<Partition> out;
  for (int i = 0; i < 3; ++i) {
    Partition lam = mu;
    lam.parts[i] += 1;
    bool decreasing = lam.parts[0] >= lam.parts[1] && lam.parts[1] >= lam.parts[2];
    if (decreasing && lam.parts[0] <= d - 1) out.push_back(lam);
  }
  std::sort(out.begin(), out.end(),
            [](const Partition& x, const Partition& y) { return x.parts > y.parts; });
  return out;
}

}  // namespace amci
