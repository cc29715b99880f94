#include "selftest.hpp"

#include <functional>
#include <string>

#include "iquo/abundance.hpp"
#include "iquo/builders.hpp"
#include "iquo/conditions.hpp"
#include "iquo/inverse.hpp"
#include "iquo/morphisms.hpp"
#include "iquo/quotient.hpp"
#include "iquo/relations.hpp"
#include "iquo/semigroup.hpp"

namespace iquo::tools {

namespace {

struct Runner {
  std::ostream& out;
  bool all_ok = true;

  void check(const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
      ok = body();
    } catch (const std::exception& e) {
      note = e.what();
    }
    out << name << (ok ? " PASS" : " FAIL") << '\n';
    if (!ok && !note.empty()) out << "  error: " << note << '\n';
    all_ok = all_ok && ok;
  }
};

}  // namespace

bool selftest(std::ostream& out) {
  Runner r{out};

  const auto b2 = brandt(trivial_group(), 2);
  const auto c2z = group_with_zero(cyclic_group(2));
  const auto s1 = example_fixture(trivial_group(), 2, 1);

  r.check("fixture_tables_valid", [&] {
    return validate_table(b2.size(), 0, b2.table()).ok &&
           validate_table(c2z.size(), 0, c2z.table()).ok &&
           validate_table(s1.sub.size(), 0, s1.sub.table()).ok;
  });
  r.check("sgp_round_trip", [&] {
    return parse_sgp(serialize_sgp(b2)) == b2 && parse_sgp(serialize_sgp(s1.sub)) == s1.sub;
  });
  r.check("b2_is_brandt", [&] { return inverse_profile(b2).brandt; });
  r.check("b2_primitive_facts", [&] {
    return primitive_facts_check(b2, inverse_profile(b2).inv_map).all_pass;
  });
  r.check("s1_conditions", [&] {
    const auto p = profile(s1.sub);
    return p.left_i_quotient && !p.holds(Cond::D_dual);
  });
  r.check("s1_quotient_is_b2", [&] {
    const auto q = build_quotient(s1.sub);
    if (q.size() != 5) return false;
    std::vector<int> pinned(q.size(), -1);
    for (int a = 0; a < s1.sub.size(); ++a) pinned[q.theta(a)] = s1.inclusion[a];
    return find_isomorphism(q.semigroup(), b2, pinned).has_value();
  });
  r.check("s1_left_i_order", [&] {
    const auto q = build_quotient(s1.sub);
    const auto rep = verify_left_i_order(s1.sub, q.semigroup(), q.theta_map());
    return rep.ok && rep.straight;
  });
  r.check("c2z_self_quotient", [&] {
    const auto q = build_quotient(c2z);
    return q.size() == 3 && find_isomorphism(q.semigroup(), c2z).has_value();
  });
  r.check("union_decompose_round_trip", [&] {
    const auto u = zero_direct_union({b2, c2z});
    const auto dec = zero_direct_union_decompose(u);
    return dec.components.size() == 2 && find_isomorphism(dec.components[0], b2).has_value() &&
           find_isomorphism(dec.components[1], c2z).has_value();
  });
  r.check("brandt_criterion_matches_profile", [&] {
    const auto u2 = zero_direct_union({c2z, c2z});
    return brandt_criterion(s1.sub).holds && brandt_criterion(c2z).holds &&
           !brandt_criterion(u2).holds;
  });
  r.check("s1_abundance", [&] {
    const auto p = abundance_profile(s1.sub);
    return p.left_adequate && p.left_ample && !p.right_abundant;
  });
  r.check("b2_amplecate", [&] { return check_amplecate(b2).agree && check_amplecate(b2).categorical; });
  r.check("two_sided_c2z", [&] {
    const auto rep = two_sided_suite(c2z);
    return rep.dual_conditions && rep.right_i_order && rep.relations_match.value_or(false) &&
           rep.hstar_congruence.value_or(false) && rep.reduce_agrees;
  });
  r.check("enumeration_order_3_sweep", [&] {
    int total = 0, passing = 0;
    enumerate_semigroups_with_zero(3, [&](const FiniteSemigroup& s) {
      ++total;
      const auto p = profile(s);
      if (!p.left_i_quotient) return;
      ++passing;
      const auto q = build_quotient(s);
      if (!verify_well_definedness(q) || !verify_order_identities(q))
        throw Error("construction invariant failed during the sweep");
    });
    return total == 20 && passing == 5;
  });

  out << (r.all_ok ? "SELFTEST PASS" : "SELFTEST FAIL") << '\n';
  return r.all_ok;
}

}  // namespace iquo::tools
