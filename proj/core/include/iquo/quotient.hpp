#pragma once

#include <optional>
#include <string>
#include <vector>

#include "iquo/conditions.hpp"
#include "iquo/relations.hpp"
#include "iquo/semigroup.hpp"

namespace iquo {

/// A pair (a,b) of R*-related elements of S; the raw material of the
/// quotient. (a = 0 iff b = 0, since 0 is alone in its R*-class.)
struct SigmaPair {
  int a = 0;
  int b = 0;
  friend auto operator<=>(const SigmaPair&, const SigmaPair&) = default;
};

/// Sigma = {(a,b) : a R* b}, in lexicographic order, (0,0) first.
std::vector<SigmaPair> build_sigma(const FiniteSemigroup& s, const Partition& rstar);

/// The equivalence classes of ~ on Sigma: (a,b) ~ (c,d) iff all four are zero
/// or some nonzero x,y give xa = yc != 0 and xb = yd != 0.
struct SimPartition {
  int n = 0;                                   // |S|
  std::vector<std::vector<SigmaPair>> classes;  // class 0 = {(0,0)}; then by least pair
  std::vector<int> pair_class;                  // n*n, -1 for pairs outside Sigma

  int class_of(SigmaPair p) const { return pair_class[static_cast<size_t>(p.a) * n + p.b]; }
  SigmaPair canonical_rep(int cls) const { return classes[cls].front(); }
  int class_count() const { return static_cast<int>(classes.size()); }
};

/// Partition Sigma by pairwise ~ and verify the result really is an
/// equivalence (reflexive on Sigma*, symmetric, and pairwise-transitive).
/// Throws NotAnEquivalence when it is not, which signals that S fails one of
/// the conditions (A)-(D).
SimPartition sim_partition(const FiniteSemigroup& s, const std::vector<SigmaPair>& sigma);

/// Product of two ~-classes: [a,b][c,d] = [xa,yd] for the first witness pair
/// (x,y) with xb = yc != 0, or the zero class when b and c are not
/// lambda-related. Representative and witness choice do not affect the
/// result (verifiable via verify_well_definedness).
int quotient_multiply(const FiniteSemigroup& s, const SimPartition& sim, int class1, int class2);

/// The constructed semigroup Q = Sigma/~ together with the embedding theta
/// and the inverse map. Built by build_quotient; immutable.
class QuotientSemigroup {
 public:
  const FiniteSemigroup& semigroup() const { return q_; }
  const FiniteSemigroup& source() const { return s_; }
  const SimPartition& sim() const { return sim_; }

  int size() const { return q_.size(); }
  int multiply(int q1, int q2) const { return q_.product(q1, q2); }
  int inverse(int q) const { return inv_[q]; }
  const std::vector<int>& inv_map() const { return inv_; }
  int theta(int a) const { return theta_[a]; }
  const std::vector<int>& theta_map() const { return theta_; }
  SigmaPair canonical_rep(int q) const { return sim_.canonical_rep(q); }
  int class_of(SigmaPair p) const { return sim_.class_of(p); }

  /// Q index of the class of (x, xa); every element of the theta image.
  friend QuotientSemigroup build_quotient(const FiniteSemigroup& s);

 private:
  FiniteSemigroup s_;
  FiniteSemigroup q_;
  SimPartition sim_;
  std::vector<int> inv_;
  std::vector<int> theta_;
};

/// The Theorem 3.1 construction. Requires S to satisfy (A)-(D); throws
/// ConditionsNotSatisfied otherwise. The returned table is re-verified from
/// scratch (associativity, inverse structure, commuting idempotents,
/// primitivity, theta a monomorphism) rather than trusted.
QuotientSemigroup build_quotient(const FiniteSemigroup& s);

struct LeftIOrderReport {
  bool ok = false;
  std::optional<int> unreachable;  // least q with no decomposition, when !ok
  /// decomposition[q] = (a,b) with q = emb(a)^-1 emb(b), first in lex order.
  std::vector<std::array<int, 2>> decomposition;
  bool straight = false;  // every chosen pair is R-related in Q
  std::string to_text() const;
};

/// Check that emb(S) is a left I-order in Q: every element of Q factors as
/// emb(a)^-1 emb(b). Requires Q inverse and emb a monomorphism (throws
/// PreconditionUnverified otherwise).
LeftIOrderReport verify_left_i_order(const FiniteSemigroup& s, const FiniteSemigroup& q,
                                     const std::vector<int>& emb);

// Exhaustive re-verifications of the construction's internal lemmas. Each
// returns true when the property holds on the concrete tables; they exist so
// the theorem is never trusted silently.

/// Every representative of class1/class2 and every multiplication witness
/// produces the same product class.
bool verify_well_definedness(const QuotientSemigroup& q);
/// [a,b] = [xa,xb] whenever both lie in Q*.
bool verify_translation_collapse(const QuotientSemigroup& q);
/// sa = tc != 0, sb = td != 0, xa = yc != 0 together force xb = yd != 0
/// (all eight elements nonzero).
bool verify_witness_transfer(const FiniteSemigroup& s);
/// theta(a)^-1 theta(b) = [a,b] for every (a,b) in Sigma*.
bool verify_theta_factorization(const QuotientSemigroup& q);
/// Every nonzero idempotent of Q is theta(a)^-1 theta(a) for some nonzero a.
bool verify_idempotent_source(const QuotientSemigroup& q);
/// In Q: nonzero a^-1 b forces a R b; a^-1 b R c^-1 d iff a lambda c; and
/// a^-1 b L c^-1 d iff b lambda d (all over nonzero elements of S).
bool verify_quotient_corollaries(const QuotientSemigroup& q);
/// theta(0) = 0; L and R of Q pull back to lambda and R*; Sa != 0 on S*;
/// rho is contained in R*.
bool verify_order_identities(const QuotientSemigroup& q);

}  // namespace iquo
