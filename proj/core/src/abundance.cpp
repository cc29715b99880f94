#include "iquo/abundance.hpp"

#include <sstream>

#include "iquo/conditions.hpp"
#include "iquo/inverse.hpp"
#include "iquo/quotient.hpp"
#include "iquo/relations.hpp"

namespace iquo {

AbundanceProfile abundance_profile(const FiniteSemigroup& s) {
  const int n = s.size();
  const auto st = starred(s);
  const bool commute = idempotents_commute(s);

  AbundanceProfile p;
  p.plus_map.assign(n, -1);
  p.star_map.assign(n, -1);
  p.left_abundant = true;
  p.right_abundant = true;
  for (int a = 0; a < n; ++a) {
    for (int e = 0; e < n; ++e) {
      if (s.product(e, e) != e) continue;
      if (st.rstar.same(a, e)) {
        if (p.plus_map[a] >= 0 && commute)
          throw Error("internal: two idempotents share an R*-class despite commuting");
        if (p.plus_map[a] < 0) p.plus_map[a] = e;
      }
      if (st.lstar.same(a, e)) {
        if (p.star_map[a] >= 0 && commute)
          throw Error("internal: two idempotents share an L*-class despite commuting");
        if (p.star_map[a] < 0) p.star_map[a] = e;
      }
    }
    if (p.plus_map[a] < 0) p.left_abundant = false;
    if (p.star_map[a] < 0) p.right_abundant = false;
  }

  p.left_adequate = p.left_abundant && commute;
  p.right_adequate = p.right_abundant && commute;
  p.adequate = p.left_adequate && p.right_adequate;

  if (p.left_adequate) {
    p.left_ample = true;
    for (int a = 0; a < n && p.left_ample; ++a)
      for (int e = 0; e < n; ++e) {
        if (s.product(e, e) != e) continue;
        const int ae = s.product(a, e);
        if (s.product(p.plus_map[ae], a) != ae) {
          p.left_ample = false;
          break;
        }
      }
  }
  if (p.right_adequate) {
    p.right_ample = true;
    for (int a = 0; a < n && p.right_ample; ++a)
      for (int e = 0; e < n; ++e) {
        if (s.product(e, e) != e) continue;
        const int ea = s.product(e, a);
        if (s.product(a, p.star_map[ea]) != ea) {
          p.right_ample = false;
          break;
        }
      }
  }
  p.ample = p.left_ample && p.right_ample;
  return p;
}

std::string AbundanceProfile::to_text() const {
  std::ostringstream out;
  auto yn = [](bool b) { return b ? "YES" : "NO"; };
  out << "LEFT_ABUNDANT " << yn(left_abundant) << '\n';
  out << "RIGHT_ABUNDANT " << yn(right_abundant) << '\n';
  out << "LEFT_ADEQUATE " << yn(left_adequate) << '\n';
  out << "RIGHT_ADEQUATE " << yn(right_adequate) << '\n';
  out << "ADEQUATE " << yn(adequate) << '\n';
  out << "LEFT_AMPLE " << yn(left_ample) << '\n';
  out << "RIGHT_AMPLE " << yn(right_ample) << '\n';
  out << "AMPLE " << yn(ample) << '\n';
  out << "PLUS_MAP";
  for (int v : plus_map) out << ' ' << v;
  out << '\n';
  out << "STAR_MAP";
  for (int v : star_map) out << ' ' << v;
  out << '\n';
  return out.str();
}

AmplecateReport check_amplecate(const FiniteSemigroup& s) {
  const auto profile = abundance_profile(s);
  if (!profile.ample || !primitive_idempotents(s))
    throw PreconditionUnverified("the amplecate criterion requires a primitive ample semigroup");

  AmplecateReport report;
  report.categorical = check_A(s).holds;
  report.star_plus_criterion = true;
  for (int a = 1; a < s.size() && report.star_plus_criterion; ++a)
    for (int b = 1; b < s.size(); ++b)
      if ((profile.star_map[a] == profile.plus_map[b]) != (s.product(a, b) != 0)) {
        report.star_plus_criterion = false;
        break;
      }
  report.agree = report.categorical == report.star_plus_criterion;
  return report;
}

std::string AmplecateReport::to_text() const {
  std::ostringstream out;
  auto yn = [](bool b) { return b ? "YES" : "NO"; };
  out << "CATEGORICAL " << yn(categorical) << '\n';
  out << "STAR_PLUS_CRITERION " << yn(star_plus_criterion) << '\n';
  out << "AGREE " << yn(agree) << '\n';
  return out.str();
}

ClassificationReport abundant_classification(const FiniteSemigroup& s) {
  const auto ab = abundance_profile(s);
  const auto cond = profile(s);
  const bool primitive = primitive_idempotents(s);
  const bool abundant = ab.left_abundant && ab.right_abundant;

  ClassificationReport r;
  r.left_item1 = abundant && cond.left_i_quotient;
  if (r.left_item1) build_quotient(s);  // must succeed; throws on defect
  r.left_item2 = primitive && ab.adequate && cond.holds(Cond::C);
  r.left_item3 = cond.holds(Cond::B) && cond.holds(Cond::A) && cond.holds(Cond::Star) &&
                 cond.holds(Cond::C);
  r.left_agree = r.left_item1 == r.left_item2 && r.left_item2 == r.left_item3;

  r.two_item1 = abundant && cond.i_quotient;
  r.two_item2 = primitive && ab.adequate && cond.holds(Cond::C) && cond.holds(Cond::C_dual);
  r.two_item3 = r.left_item3 && cond.holds(Cond::C_dual);
  r.two_agree = r.two_item1 == r.two_item2 && r.two_item2 == r.two_item3;
  return r;
}

std::string ClassificationReport::to_text() const {
  std::ostringstream out;
  auto yn = [](bool b) { return b ? "YES" : "NO"; };
  out << "LEFT_ABUNDANT_I_ORDER " << yn(left_item1) << '\n';
  out << "LEFT_PRIMITIVE_ADEQUATE_LAMBDA " << yn(left_item2) << '\n';
  out << "LEFT_CANCELLATIVE_CATEGORICAL_STAR_LAMBDA " << yn(left_item3) << '\n';
  out << "LEFT_AGREE " << yn(left_agree) << '\n';
  out << "TWO_SIDED_ABUNDANT_I_ORDER " << yn(two_item1) << '\n';
  out << "TWO_SIDED_PRIMITIVE_ADEQUATE_LAMBDA_RHO " << yn(two_item2) << '\n';
  out << "TWO_SIDED_CANCELLATIVE_CATEGORICAL_STAR_LAMBDA_RHO " << yn(two_item3) << '\n';
  out << "TWO_SIDED_AGREE " << yn(two_agree) << '\n';
  return out.str();
}

}  // namespace iquo
