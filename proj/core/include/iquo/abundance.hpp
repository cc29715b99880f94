#pragma once

#include <string>
#include <vector>

#include "iquo/semigroup.hpp"

namespace iquo {

struct AbundanceProfile {
  bool left_abundant = false;   // every R*-class contains an idempotent
  bool right_abundant = false;  // every L*-class contains an idempotent
  bool left_adequate = false;   // left abundant with commuting idempotents
  bool right_adequate = false;
  bool adequate = false;
  bool left_ample = false;   // left adequate and (ae)+ a = ae
  bool right_ample = false;  // right adequate and a (ea)* = ea
  bool ample = false;
  std::vector<int> plus_map;  // a -> idempotent in the R*-class of a, -1 if none
  std::vector<int> star_map;  // a -> idempotent in the L*-class of a, -1 if none
  std::string to_text() const;
};

AbundanceProfile abundance_profile(const FiniteSemigroup& s);

struct AmplecateReport {
  bool categorical = false;          // categoricity at 0, computed directly
  bool star_plus_criterion = false;  // a* = b+ iff ab != 0, over nonzero a,b
  bool agree = false;
  std::string to_text() const;
};

/// The categoricity criterion for primitive ample semigroups: categorical at
/// 0 iff a* = b+ exactly when ab != 0. Both sides computed independently.
/// Throws PreconditionUnverified unless S is primitive and ample.
AmplecateReport check_amplecate(const FiniteSemigroup& s);

struct ClassificationReport {
  // Left case: abundant left I-order / primitive adequate + transitive lambda /
  // cancellative + categorical + (*) + transitive lambda.
  bool left_item1 = false, left_item2 = false, left_item3 = false;
  bool left_agree = false;
  // Two-sided analogue with rho transitive as well.
  bool two_item1 = false, two_item2 = false, two_item3 = false;
  bool two_agree = false;
  std::string to_text() const;
};

/// Compute the three equivalent characterizations independently (for both
/// the left and the two-sided case) and report whether they coincide.
ClassificationReport abundant_classification(const FiniteSemigroup& s);

}  // namespace iquo
