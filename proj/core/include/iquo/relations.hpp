#pragma once

#include <optional>
#include <vector>

#include "iquo/semigroup.hpp"

namespace iquo {

/// Square boolean relation over the elements of a semigroup. No structural
/// properties are assumed; reflexivity/symmetry/transitivity are computed,
/// never taken on faith.
struct BinaryRelation {
  int n = 0;
  std::vector<char> bits;  // row-major n*n

  BinaryRelation() = default;
  explicit BinaryRelation(int size) : n(size), bits(static_cast<size_t>(size) * size, 0) {}

  bool at(int a, int b) const { return bits[static_cast<size_t>(a) * n + b] != 0; }
  void set(int a, int b, bool v = true) { bits[static_cast<size_t>(a) * n + b] = v ? 1 : 0; }

  static BinaryRelation identity(int n);
  BinaryRelation intersect(const BinaryRelation& other) const;
  bool subset_of(const BinaryRelation& other) const;

  friend bool operator==(const BinaryRelation&, const BinaryRelation&) = default;
};

/// A partition of {0..n-1} into disjoint classes. Classes are listed by least
/// member, members sorted ascending; class_of is consistent with classes.
struct Partition {
  int n = 0;
  std::vector<int> class_of;
  std::vector<std::vector<int>> classes;

  bool same(int a, int b) const { return class_of[a] == class_of[b]; }
  BinaryRelation to_relation() const;

  /// Normalize raw per-element class ids into canonical form.
  static Partition from_ids(const std::vector<int>& raw_ids);

  friend bool operator==(const Partition&, const Partition&) = default;
};

struct GreenRelations {
  Partition r, l, h, d;
};

/// Green's relations from principal one-sided ideals: a R b iff aS^1 = bS^1,
/// a L b iff S^1a = S^1b, H = R meet L, D = join of R and L (the transitive
/// closure of their union, which equals R o L on a finite semigroup).
GreenRelations green(const FiniteSemigroup& s);

struct StarredRelations {
  Partition rstar, lstar, hstar;
};

/// Starred Green's relations: a R* b iff the left-translation kernels
/// {(x,y) in S^1 x S^1 : xa = ya} coincide; L* dually; H* = R* meet L*.
/// A fresh identity is always adjoined to form S^1.
StarredRelations starred(const FiniteSemigroup& s);

struct LambdaRhoTau {
  BinaryRelation lambda, rho, tau;
};

/// a lambda b iff a = b = 0 or Sa and Sb share a nonzero element; rho dually
/// with right ideals; tau = lambda meet rho. Returned raw: transitivity of
/// lambda is exactly condition (C) and must be observable as failing.
LambdaRhoTau lambda_rho_tau(const FiniteSemigroup& s);

struct RelationProperties {
  bool reflexive = false;
  bool symmetric = false;
  bool transitive = false;
  bool is_equivalence = false;
  std::optional<int> reflexivity_witness;                  // a with not (a r a)
  std::optional<std::array<int, 2>> symmetry_witness;      // (a,b) with a r b, not b r a
  std::optional<std::array<int, 3>> transitivity_witness;  // (a,b,c), least failing
};

RelationProperties relation_properties(const BinaryRelation& r);

/// Extract the partition of an equivalence relation. Throws NotAnEquivalence
/// if the relation fails any of the three properties.
Partition to_partition(const BinaryRelation& r);

}  // namespace iquo
