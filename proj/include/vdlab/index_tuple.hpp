#pragma once

#include <string>
#include <vector>

#include "vdlab/rational.hpp"

namespace vdlab {

// The pair (k; I) with I = (i_0 < i_1 < ... < i_{m-1}), entries >= 0, m >= k.
struct IndexTuple {
  int k = 0;
  std::vector<int> entries;

  IndexTuple(int k_, std::vector<int> e);

  int m() const { return static_cast<int>(entries.size()); }
  bool zero_anchored() const { return entries.front() == 0; }

  // N = sum_{j>=1} i_j (the anchor entry is excluded).
  long long weight_sum() const;
  // gcd(i_1 - i_0, ..., i_{m-1} - i_0).
  int gap_gcd() const;
  // sorted { i_{m-1} - i_j }.
  IndexTuple dual() const;

  std::string to_string() const;  // comma separated
  static IndexTuple parse(const std::string& csv, int k);

  bool operator==(const IndexTuple& o) const {
    return k == o.k && entries == o.entries;
  }
};

// Partition of k: parts weakly decreasing, each >= 1.
struct PartitionSpec {
  std::vector<int> parts;

  explicit PartitionSpec(std::vector<int> p);
  int total() const;
  int length() const { return static_cast<int>(parts.size()); }
  std::string to_string() const;
};

// All partitions of n, lexicographically decreasing first part.
std::vector<PartitionSpec> partitions_of(int n);

// Strictly increasing tuples (0, i_1, ..., i_{m-1}) with entries <= bound
// and gcd of gaps 1, in lexicographic order.
std::vector<IndexTuple> gcd1_tuples(int k, int m, int bound, int i1_min = 1);

}  // namespace vdlab
