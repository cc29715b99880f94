#pragma once

#include <string>
#include <vector>

#include "iquo/conditions.hpp"
#include "iquo/relations.hpp"
#include "iquo/semigroup.hpp"

namespace iquo {

std::vector<int> idempotents_of(const FiniteSemigroup& s);
bool idempotents_commute(const FiniteSemigroup& s);
/// Natural order on idempotents: e <= f iff ef = fe = e.
bool nat_leq(const FiniteSemigroup& s, int e, int f);
/// Every nonzero idempotent is primitive (nothing strictly between it and 0).
bool primitive_idempotents(const FiniteSemigroup& s);

struct InverseProfile {
  bool regular = false;
  bool inverse = false;
  bool semilattice = false;  // idempotents commute
  bool primitive = false;
  bool brandt = false;  // primitive + inverse + a single nonzero D-class
  std::vector<int> inv_map;  // element -> unique inverse; empty unless inverse
  std::vector<int> idempotents;
  Partition d_components;  // Green's D; the zero class is a singleton
  int nonzero_d_classes = 0;
  std::string to_text() const;
};

InverseProfile inverse_profile(const FiniteSemigroup& s);

struct FactCheck {
  std::string item;
  bool pass = true;
  std::vector<int> witness;
};

struct PrimitiveFactsReport {
  bool all_pass = true;
  std::vector<FactCheck> items;
  std::string to_text() const;
};

/// The five standard facts about a primitive inverse semigroup, checked on
/// the concrete table: categoricity at 0; ef != 0 forces e = f on nonzero
/// idempotents; es != 0 forces es = s (and dually); as = a forces s equal to
/// the idempotent inv(a)a (and dually); ab != 0 forces inv(a)a = b inv(b)...
/// any violation signals the input is not actually primitive inverse.
PrimitiveFactsReport primitive_facts_check(const FiniteSemigroup& q, const std::vector<int>& inv);

/// Brandt criterion for a left I-order: for all nonzero a,b there are c,d
/// with ca R* d and d lambda b. Meaningful for S passing (A)-(D), where it
/// holds iff the constructed quotient is a Brandt semigroup.
Verdict brandt_criterion(const FiniteSemigroup& s);

struct Decomposition {
  std::vector<FiniteSemigroup> components;
  /// element_maps[c][i] = index in the original of component c's element i.
  std::vector<std::vector<int>> element_maps;
  /// component_of[e] for nonzero e; -1 for the zero.
  std::vector<int> component_of;
};

/// Split a primitive inverse semigroup into its 0-direct union of Brandt
/// components (one per nonzero D-class, ordered by least element). Throws
/// NotPrimitiveInverse if the profile does not verify.
Decomposition zero_direct_union_decompose(const FiniteSemigroup& q);

}  // namespace iquo
