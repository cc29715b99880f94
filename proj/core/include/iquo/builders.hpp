#pragma once

#include <functional>
#include <string>
#include <vector>

#include "iquo/semigroup.hpp"

namespace iquo {

/// A finite group given by its Cayley table.
struct GroupTable {
  int m = 1;
  std::vector<int> table{0};
  int identity = 0;
  std::vector<std::string> labels{"e"};

  int product(int a, int b) const { return table[static_cast<size_t>(a) * m + b]; }

  /// Validates associativity, the identity law and existence of inverses.
  static GroupTable from_table(int m, std::vector<int> table,
                               std::vector<std::string> labels = {});
};

GroupTable trivial_group();
/// Cyclic group of order m, labels e, g, g2, ...
GroupTable cyclic_group(int m);

/// Brandt semigroup B(G,k) on (I x G x I) u {0} with I = {1..k} and
/// (i,a,j)(l,b,t) = (i,ab,t) if j = l, else 0. Elements are ordered zero
/// first, then (i,g,j) by (i,j,g); labels "(i,g,j)".
FiniteSemigroup brandt(const GroupTable& g, int k);

/// G with a fresh absorbing zero adjoined (the k = 1 Brandt collapse).
FiniteSemigroup group_with_zero(const GroupTable& g);

struct FixtureResult {
  FiniteSemigroup sub;
  std::vector<int> inclusion;  // sub element -> ambient element
  FiniteSemigroup ambient;     // brandt(g, k)
};

/// The row fixture {(i,h,j) : h in G, j in I} u {0} inside brandt(g,k): a
/// straight left I-order in B(G,k) that is not a right I-order. Requires
/// k >= 2 and 1 <= i <= k (throws BadIndex otherwise).
FixtureResult example_fixture(const GroupTable& g, int k, int i);

/// Disjoint union of the parts' nonzero elements plus one shared zero;
/// within-part products as before, cross-part products 0. Empty list gives
/// the one-element semigroup.
FiniteSemigroup zero_direct_union(const std::vector<FiniteSemigroup>& parts);

struct EnumerateOptions {
  int max_order = 4;
  bool up_to_isomorphism = false;
  /// Optional filter applied before yielding.
  std::function<bool(const FiniteSemigroup&)> predicate;
};

/// Stream every associative table on {0..n-1} with absorbing zero at index 0,
/// in lexicographic order of the flattened table. Throws TooLarge when n
/// exceeds the configured cap. With up_to_isomorphism set, only the
/// lexicographically least table of each isomorphism class is yielded.
void enumerate_semigroups_with_zero(int n, const std::function<void(const FiniteSemigroup&)>& sink,
                                    const EnumerateOptions& opts = {});

std::vector<FiniteSemigroup> enumerate_all(int n, const EnumerateOptions& opts = {});

}  // namespace iquo
