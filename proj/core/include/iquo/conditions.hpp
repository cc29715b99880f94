#pragma once

#include <string>
#include <vector>

#include "iquo/relations.hpp"
#include "iquo/semigroup.hpp"

namespace iquo {

enum class Cond { A, B, C, D, C_dual, D_dual, E, E_dual, Star };

constexpr std::array<Cond, 9> kAllConds = {Cond::A,      Cond::B, Cond::C,      Cond::D,
                                           Cond::C_dual, Cond::D_dual, Cond::E, Cond::E_dual,
                                           Cond::Star};

std::string_view cond_name(Cond c);

/// Outcome of one condition check. On failure, witness is the
/// lexicographically least failing tuple. For the per-element existential
/// conditions (D, its dual, and (*)) a passing verdict carries a spot sample
/// for the least nonzero element.
struct Verdict {
  bool holds = false;
  std::vector<int> witness;
};

/// Categorical at 0: no triple with ab != 0, bc != 0 but abc = 0.
Verdict check_A(const FiniteSemigroup& s);
/// 0-cancellative: ab = ac != 0 forces b = c, and ba = ca != 0 forces b = c.
Verdict check_B(const FiniteSemigroup& s);
/// lambda is transitive.
Verdict check_C(const FiniteSemigroup& s);
/// rho is transitive.
Verdict check_C_dual(const FiniteSemigroup& s);
/// Sa != 0 for every nonzero a.
Verdict check_D(const FiniteSemigroup& s);
/// aS != 0 for every nonzero a.
Verdict check_D_dual(const FiniteSemigroup& s);
/// rho coincides with {(0,0)} u {(a,b) nonzero : some x has xa != 0, xb != 0}.
Verdict check_E(const FiniteSemigroup& s);
/// lambda coincides with {(0,0)} u {(a,b) nonzero : some x has ax != 0, bx != 0}.
Verdict check_E_dual(const FiniteSemigroup& s);
/// (*): every a has a left local identity (ea = a) and a right one (af = a).
Verdict check_star(const FiniteSemigroup& s);

Verdict check(const FiniteSemigroup& s, Cond c);

/// Every condition verdict plus the theorem-level summaries. Nothing
/// short-circuits: all verdicts are computed even after one fails.
struct ConditionReport {
  std::vector<std::pair<Cond, Verdict>> verdicts;  // in kAllConds order

  bool left_i_quotient = false;       // A & B & C & D
  bool right_i_quotient = false;      // A & B & C dual & D dual
  bool i_quotient = false;            // both of the above
  bool i_quotient_via_rstar = false;  // A,B,C,D, D dual and R* included in rho
  bool i_quotient_via_e = false;      // A,B,D, D dual, E and E dual
  bool primitive_adequate = false;    // A & B & (*)
  bool rstar_subset_rho = false;

  const Verdict& verdict(Cond c) const;
  bool holds(Cond c) const { return verdict(c).holds; }

  /// Stable line grammar: "NAME PASS|FAIL [witness...]" per condition, then
  /// "SUMMARY NAME YES|NO" lines.
  std::string to_text() const;
};

ConditionReport profile(const FiniteSemigroup& s);

class ConditionsNotSatisfied : public Error {
 public:
  explicit ConditionsNotSatisfied(ConditionReport r)
      : Error("semigroup fails conditions required for the quotient construction:\n" +
              r.to_text()),
        report(std::move(r)) {}
  ConditionReport report;
};

}  // namespace iquo
