#pragma once

#include <optional>
#include <string>
#include <vector>

#include "iquo/quotient.hpp"
#include "iquo/semigroup.hpp"

namespace iquo {

enum class MorphismKind { Raw, Hom, Mono, Iso };

std::string_view morphism_kind_name(MorphismKind k);

/// A total element mapping between two finite semigroups with its computed
/// classification.
struct Morphism {
  std::vector<int> map;
  MorphismKind kind = MorphismKind::Raw;
};

/// Classify a total map by exhaustive check: Hom iff it preserves products,
/// Mono adds injectivity, Iso adds bijectivity.
Morphism classify(const std::vector<int>& map, const FiniteSemigroup& s,
                  const FiniteSemigroup& t);

/// Exhaustive backtracking search for an isomorphism extending the pinned
/// partial map (-1 entries are free; an empty vector pins nothing). Pruned by
/// zero, idempotency, R/L/H/D-class sizes and per-D-class idempotent counts;
/// branches in lexicographic order so the first hit is deterministic.
std::optional<std::vector<int>> find_isomorphism(const FiniteSemigroup& q1,
                                                 const FiniteSemigroup& q2,
                                                 const std::vector<int>& pinned = {});

/// The ternary relation on S inside Q: (a,b,c) holds iff a b^-1 Q is
/// contained in c^-1 Q, with a,b,c ranging over the embedded copy of S.
struct TernaryRelation {
  int m = 0;                // |S|
  std::vector<char> cube;   // m^3, indexed (a*m + b)*m + c

  bool at(int a, int b, int c) const {
    return cube[(static_cast<size_t>(a) * m + b) * m + c] != 0;
  }
  friend bool operator==(const TernaryRelation&, const TernaryRelation&) = default;
};

TernaryRelation ternary_T(const FiniteSemigroup& q, const std::vector<int>& inv,
                          const std::vector<int>& s_image);

struct IsoCriterionReport {
  bool cond_i = false;        // the map preserves and reflects R restricted to S
  bool cond_ii = false;       // the map preserves and reflects the ternary relation
  bool conclusion = false;    // cond_i and cond_ii
  bool search_agrees = false; // exhaustive pinned search reached the same answer
  std::string to_text() const;
};

/// The isomorphism-over-S criterion: with S a straight left I-order in Q via
/// emb_q and in P via emb_p, Q and P are isomorphic over S iff R and T are
/// preserved and reflected. Cross-checked against find_isomorphism pinned on
/// the S-images. Throws PreconditionUnverified if either side fails the
/// straight left I-order check.
IsoCriterionReport check_iso_criterion(const FiniteSemigroup& s, const FiniteSemigroup& q,
                                       const std::vector<int>& emb_q, const FiniteSemigroup& p,
                                       const std::vector<int>& emb_p);

struct TwoSidedReport {
  bool dual_conditions = false;  // S also passes the duals of (C) and (D)
  bool right_i_order = false;    // every q in Q is theta(a) theta(b)^-1
  std::optional<int> unreachable;
  /// Computed when dual_conditions holds:
  std::optional<bool> relations_match;    // R* = R|S = rho and L* = L|S = lambda
  std::optional<bool> hstar_congruence;
  bool reduce_agrees = false;  // (R* in rho and aS != 0 on S*) iff right_i_order
  std::string to_text() const;
};

/// Examine the two-sided claims on Q = build_quotient(S). Requires S to pass
/// (A)-(D) (build_quotient throws otherwise).
TwoSidedReport two_sided_suite(const FiniteSemigroup& s);

}  // namespace iquo
