#include "iquo/conditions.hpp"

#include <sstream>

namespace iquo {

std::string_view cond_name(Cond c) {
  switch (c) {
    case Cond::A: return "A";
    case Cond::B: return "B";
    case Cond::C: return "C";
    case Cond::D: return "D";
    case Cond::C_dual: return "C_dual";
    case Cond::D_dual: return "D_dual";
    case Cond::E: return "E";
    case Cond::E_dual: return "E_dual";
    case Cond::Star: return "STAR";
  }
  return "?";
}

Verdict check_A(const FiniteSemigroup& s) {
  const int n = s.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int ab = s.product(a, b);
      if (ab == 0) continue;
      for (int c = 0; c < n; ++c)
        if (s.product(b, c) != 0 && s.product(ab, c) == 0) return {false, {a, b, c}};
    }
  return {true, {}};
}

Verdict check_B(const FiniteSemigroup& s) {
  const int n = s.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (b == c) continue;
        if (s.product(a, b) == s.product(a, c) && s.product(a, b) != 0)
          return {false, {a, b, c}};
        if (s.product(b, a) == s.product(c, a) && s.product(b, a) != 0)
          return {false, {a, b, c}};
      }
  return {true, {}};
}

namespace {

Verdict transitivity_verdict(const BinaryRelation& r) {
  auto props = relation_properties(r);
  if (props.transitive) return {true, {}};
  const auto& w = *props.transitivity_witness;
  return {false, {w[0], w[1], w[2]}};
}

}  // namespace

Verdict check_C(const FiniteSemigroup& s) { return transitivity_verdict(lambda_rho_tau(s).lambda); }

Verdict check_C_dual(const FiniteSemigroup& s) {
  return transitivity_verdict(lambda_rho_tau(s).rho);
}

Verdict check_D(const FiniteSemigroup& s) {
  const int n = s.size();
  Verdict v{true, {}};
  for (int a = 1; a < n; ++a) {
    int x = -1;
    for (int t = 0; t < n; ++t)
      if (s.product(t, a) != 0) {
        x = t;
        break;
      }
    if (x < 0) return {false, {a}};
    if (v.witness.empty()) v.witness = {a, x};  // spot sample for the least nonzero element
  }
  return v;
}

Verdict check_D_dual(const FiniteSemigroup& s) {
  const int n = s.size();
  Verdict v{true, {}};
  for (int a = 1; a < n; ++a) {
    int x = -1;
    for (int t = 0; t < n; ++t)
      if (s.product(a, t) != 0) {
        x = t;
        break;
      }
    if (x < 0) return {false, {a}};
    if (v.witness.empty()) v.witness = {a, x};
  }
  return v;
}

namespace {

// The condition-(E) style relation: (0,0) plus all nonzero (a,b) admitting a
// common x with xa != 0 and xb != 0 (left version; mirror=true multiplies on
// the right).
BinaryRelation common_annihilator_free(const FiniteSemigroup& s, bool mirror) {
  const int n = s.size();
  BinaryRelation r(n);
  r.set(0, 0);
  for (int a = 1; a < n; ++a)
    for (int b = 1; b < n; ++b)
      for (int x = 0; x < n; ++x) {
        const int xa = mirror ? s.product(a, x) : s.product(x, a);
        const int xb = mirror ? s.product(b, x) : s.product(x, b);
        if (xa != 0 && xb != 0) {
          r.set(a, b);
          break;
        }
      }
  return r;
}

Verdict relation_equality_verdict(const BinaryRelation& lhs, const BinaryRelation& rhs) {
  for (int a = 0; a < lhs.n; ++a)
    for (int b = 0; b < lhs.n; ++b)
      if (lhs.at(a, b) != rhs.at(a, b)) return {false, {a, b}};
  return {true, {}};
}

}  // namespace

Verdict check_E(const FiniteSemigroup& s) {
  return relation_equality_verdict(lambda_rho_tau(s).rho, common_annihilator_free(s, false));
}

Verdict check_E_dual(const FiniteSemigroup& s) {
  return relation_equality_verdict(lambda_rho_tau(s).lambda, common_annihilator_free(s, true));
}

Verdict check_star(const FiniteSemigroup& s) {
  const int n = s.size();
  Verdict v{true, {}};
  for (int a = 0; a < n; ++a) {
    int e = -1, f = -1;
    for (int t = 0; t < n; ++t) {
      if (e < 0 && s.product(t, a) == a) e = t;
      if (f < 0 && s.product(a, t) == a) f = t;
    }
    if (e < 0 || f < 0) return {false, {a}};
    if (a >= 1 && v.witness.empty()) v.witness = {a, e, f};
  }
  return v;
}

Verdict check(const FiniteSemigroup& s, Cond c) {
  switch (c) {
    case Cond::A: return check_A(s);
    case Cond::B: return check_B(s);
    case Cond::C: return check_C(s);
    case Cond::D: return check_D(s);
    case Cond::C_dual: return check_C_dual(s);
    case Cond::D_dual: return check_D_dual(s);
    case Cond::E: return check_E(s);
    case Cond::E_dual: return check_E_dual(s);
    case Cond::Star: return check_star(s);
  }
  throw Error("unknown condition");
}

const Verdict& ConditionReport::verdict(Cond c) const {
  for (const auto& [cond, v] : verdicts)
    if (cond == c) return v;
  throw Error("condition missing from report");
}

std::string ConditionReport::to_text() const {
  std::ostringstream out;
  for (const auto& [cond, v] : verdicts) {
    out << cond_name(cond) << (v.holds ? " PASS" : " FAIL");
    for (int w : v.witness) out << ' ' << w;
    out << '\n';
  }
  auto yn = [](bool b) { return b ? "YES" : "NO"; };
  out << "SUMMARY LEFT_I_QUOTIENT " << yn(left_i_quotient) << '\n';
  out << "SUMMARY RIGHT_I_QUOTIENT " << yn(right_i_quotient) << '\n';
  out << "SUMMARY I_QUOTIENT " << yn(i_quotient) << '\n';
  out << "SUMMARY I_QUOTIENT_VIA_RSTAR " << yn(i_quotient_via_rstar) << '\n';
  out << "SUMMARY I_QUOTIENT_VIA_E " << yn(i_quotient_via_e) << '\n';
  out << "SUMMARY PRIMITIVE_ADEQUATE " << yn(primitive_adequate) << '\n';
  out << "SUMMARY RSTAR_SUBSET_RHO " << yn(rstar_subset_rho) << '\n';
  return out.str();
}

ConditionReport profile(const FiniteSemigroup& s) {
  ConditionReport r;
  for (Cond c : kAllConds) r.verdicts.emplace_back(c, check(s, c));

  const auto rel = lambda_rho_tau(s);
  const auto st = starred(s);
  r.rstar_subset_rho = st.rstar.to_relation().subset_of(rel.rho);

  const bool a = r.holds(Cond::A), b = r.holds(Cond::B);
  const bool c = r.holds(Cond::C), d = r.holds(Cond::D);
  const bool cd = r.holds(Cond::C_dual), dd = r.holds(Cond::D_dual);
  const bool e = r.holds(Cond::E), ed = r.holds(Cond::E_dual);

  r.left_i_quotient = a && b && c && d;
  r.right_i_quotient = a && b && cd && dd;
  r.i_quotient = r.left_i_quotient && r.right_i_quotient;
  r.i_quotient_via_rstar = a && b && c && d && dd && r.rstar_subset_rho;
  r.i_quotient_via_e = a && b && d && dd && e && ed;
  r.primitive_adequate = a && b && r.holds(Cond::Star);
  return r;
}

}  // namespace iquo
