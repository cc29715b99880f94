#include "iquo/morphisms.hpp"

#include <algorithm>
#include <sstream>

#include "iquo/inverse.hpp"
#include "iquo/relations.hpp"

namespace iquo {

std::string_view morphism_kind_name(MorphismKind k) {
  switch (k) {
    case MorphismKind::Raw: return "raw";
    case MorphismKind::Hom: return "hom";
    case MorphismKind::Mono: return "mono";
    case MorphismKind::Iso: return "iso";
  }
  return "?";
}

Morphism classify(const std::vector<int>& map, const FiniteSemigroup& s,
                  const FiniteSemigroup& t) {
  if (static_cast<int>(map.size()) != s.size()) throw BadIndex("map size does not match source");
  for (int v : map)
    if (v < 0 || v >= t.size()) throw BadIndex("map value out of range");

  Morphism m{map, MorphismKind::Raw};
  for (int a = 0; a < s.size(); ++a)
    for (int b = 0; b < s.size(); ++b)
      if (map[s.product(a, b)] != t.product(map[a], map[b])) return m;
  m.kind = MorphismKind::Hom;

  std::vector<char> hit(t.size(), 0);
  for (int v : map) {
    if (hit[v]) return m;
    hit[v] = 1;
  }
  m.kind = MorphismKind::Mono;
  if (s.size() == t.size()) m.kind = MorphismKind::Iso;
  return m;
}

namespace {

// Per-element invariant signature; isomorphisms preserve every coordinate.
struct Signature {
  bool is_zero;
  bool idempotent;
  int r_size, l_size, h_size, d_size;
  int idem_in_d;
  friend auto operator<=>(const Signature&, const Signature&) = default;
};

std::vector<Signature> signatures(const FiniteSemigroup& s) {
  const auto g = green(s);
  std::vector<int> idem_in_d(g.d.classes.size(), 0);
  for (int e = 0; e < s.size(); ++e)
    if (s.product(e, e) == e) ++idem_in_d[g.d.class_of[e]];
  std::vector<Signature> sig(s.size());
  for (int e = 0; e < s.size(); ++e)
    sig[e] = {e == 0,
              s.product(e, e) == e,
              static_cast<int>(g.r.classes[g.r.class_of[e]].size()),
              static_cast<int>(g.l.classes[g.l.class_of[e]].size()),
              static_cast<int>(g.h.classes[g.h.class_of[e]].size()),
              static_cast<int>(g.d.classes[g.d.class_of[e]].size()),
              idem_in_d[g.d.class_of[e]]};
  return sig;
}

struct IsoSearch {
  const FiniteSemigroup& q1;
  const FiniteSemigroup& q2;
  std::vector<Signature> sig1, sig2;
  std::vector<int> map;      // q1 -> q2, -1 unassigned
  std::vector<char> used;    // q2 image taken

  bool assign(int a, int b) { // returns false on conflict; caller unwinds via trail
    map[a] = b;
    used[b] = 1;
    return true;
  }

  // Check all products among currently assigned elements that involve a;
  // propagate forced images. Records assignments into trail for rollback.
  bool consistent(int a, std::vector<int>& trail) {
    for (int x = 0; x < q1.size(); ++x) {
      if (map[x] < 0) continue;
      for (auto [u, v] : {std::pair{a, x}, std::pair{x, a}}) {
        if (map[u] < 0 || map[v] < 0) continue;
        const int p = q1.product(u, v);
        const int image = q2.product(map[u], map[v]);
        if (map[p] >= 0) {
          if (map[p] != image) return false;
        } else {
          if (used[image] || sig1[p] != sig2[image]) return false;
          map[p] = image;
          used[image] = 1;
          trail.push_back(p);
          if (!consistent(p, trail)) return false;
        }
      }
    }
    return true;
  }

  bool solve() {
    int a = -1;
    for (int e = 0; e < q1.size(); ++e)
      if (map[e] < 0) {
        a = e;
        break;
      }
    if (a < 0) return true;
    for (int b = 0; b < q2.size(); ++b) {
      if (used[b] || sig1[a] != sig2[b]) continue;
      std::vector<int> trail{a};
      map[a] = b;
      used[b] = 1;
      if (consistent(a, trail) && solve()) return true;
      for (int e : trail) {
        used[map[e]] = 0;
        map[e] = -1;
      }
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const FiniteSemigroup& q1,
                                                 const FiniteSemigroup& q2,
                                                 const std::vector<int>& pinned) {
  if (q1.size() != q2.size()) return std::nullopt;
  if (!pinned.empty() && static_cast<int>(pinned.size()) != q1.size())
    throw BadIndex("pinned map size does not match the first semigroup");

  IsoSearch search{q1, q2, signatures(q1), signatures(q2),
                   std::vector<int>(q1.size(), -1), std::vector<char>(q2.size(), 0)};

  for (int a = 0; a < static_cast<int>(pinned.size()); ++a) {
    const int b = pinned[a];
    if (b < 0) continue;
    if (b >= q2.size()) throw BadIndex("pinned image out of range");
    if (search.used[b] || search.sig1[a] != search.sig2[b]) return std::nullopt;
    search.map[a] = b;
    search.used[b] = 1;
  }
  // Pinned products must already be consistent.
  for (int a = 0; a < q1.size(); ++a)
    if (search.map[a] >= 0) {
      std::vector<int> trail;
      if (!search.consistent(a, trail)) return std::nullopt;
    }

  if (!search.solve()) return std::nullopt;
  return search.map;
}

TernaryRelation ternary_T(const FiniteSemigroup& q, const std::vector<int>& inv,
                          const std::vector<int>& s_image) {
  const int m = static_cast<int>(s_image.size());
  const int n = q.size();

  // Right ideals uQ as membership vectors.
  std::vector<std::vector<char>> right_ideal(n, std::vector<char>(n, 0));
  for (int u = 0; u < n; ++u)
    for (int x = 0; x < n; ++x) right_ideal[u][q.product(u, x)] = 1;

  auto included = [&](const std::vector<char>& small, const std::vector<char>& big) {
    for (int e = 0; e < n; ++e)
      if (small[e] && !big[e]) return false;
    return true;
  };

  TernaryRelation t;
  t.m = m;
  t.cube.assign(static_cast<size_t>(m) * m * m, 0);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const int ab_inv = q.product(s_image[a], inv[s_image[b]]);
      for (int c = 0; c < m; ++c) {
        const int c_inv = inv[s_image[c]];
        if (included(right_ideal[ab_inv], right_ideal[c_inv]))
          t.cube[(static_cast<size_t>(a) * m + b) * m + c] = 1;
      }
    }
  return t;
}

std::string IsoCriterionReport::to_text() const {
  std::ostringstream out;
  auto yn = [](bool b) { return b ? "YES" : "NO"; };
  out << "COND_I " << yn(cond_i) << '\n';
  out << "COND_II " << yn(cond_ii) << '\n';
  out << "ISOMORPHIC_OVER_S " << yn(conclusion) << '\n';
  out << "SEARCH_AGREES " << yn(search_agrees) << '\n';
  return out.str();
}

IsoCriterionReport check_iso_criterion(const FiniteSemigroup& s, const FiniteSemigroup& q,
                                       const std::vector<int>& emb_q, const FiniteSemigroup& p,
                                       const std::vector<int>& emb_p) {
  {
    const auto left = verify_left_i_order(s, q, emb_q);
    if (!left.ok || !left.straight)
      throw PreconditionUnverified("S is not a straight left I-order in Q");
    const auto right = verify_left_i_order(s, p, emb_p);
    if (!right.ok || !right.straight)
      throw PreconditionUnverified("the image of S is not a straight left I-order in P");
  }

  const auto gq = green(q);
  const auto gp = green(p);
  IsoCriterionReport report;

  report.cond_i = true;
  for (int a = 0; a < s.size() && report.cond_i; ++a)
    for (int b = 0; b < s.size(); ++b)
      if (gq.r.same(emb_q[a], emb_q[b]) != gp.r.same(emb_p[a], emb_p[b])) {
        report.cond_i = false;
        break;
      }

  const auto inv_q = inverse_profile(q).inv_map;
  const auto inv_p = inverse_profile(p).inv_map;
  report.cond_ii = ternary_T(q, inv_q, emb_q) == ternary_T(p, inv_p, emb_p);
  report.conclusion = report.cond_i && report.cond_ii;

  std::vector<int> pinned(q.size(), -1);
  for (int a = 0; a < s.size(); ++a) pinned[emb_q[a]] = emb_p[a];
  const bool found = find_isomorphism(q, p, pinned).has_value();
  report.search_agrees = found == report.conclusion;
  return report;
}

std::string TwoSidedReport::to_text() const {
  std::ostringstream out;
  auto yn = [](bool b) { return b ? "YES" : "NO"; };
  out << "DUAL_CONDITIONS " << yn(dual_conditions) << '\n';
  out << "RIGHT_I_ORDER " << yn(right_i_order) << '\n';
  if (unreachable) out << "UNREACHABLE " << *unreachable << '\n';
  out << "RELATIONS_MATCH " << (relations_match ? yn(*relations_match) : "N/A") << '\n';
  out << "HSTAR_CONGRUENCE " << (hstar_congruence ? yn(*hstar_congruence) : "N/A") << '\n';
  out << "REDUCE_AGREES " << yn(reduce_agrees) << '\n';
  return out.str();
}

TwoSidedReport two_sided_suite(const FiniteSemigroup& s) {
  const auto q = build_quotient(s);
  const auto rel = lambda_rho_tau(s);
  const auto st = starred(s);

  TwoSidedReport report;
  report.dual_conditions = check_C_dual(s).holds && check_D_dual(s).holds;

  report.right_i_order = true;
  for (int el = 0; el < q.size(); ++el) {
    bool found = false;
    for (int a = 0; a < s.size() && !found; ++a)
      for (int b = 0; b < s.size(); ++b)
        if (q.multiply(q.theta(a), q.inverse(q.theta(b))) == el) {
          found = true;
          break;
        }
    if (!found) {
      report.right_i_order = false;
      report.unreachable = el;
      break;
    }
  }

  if (report.dual_conditions) {
    const auto g = green(q.semigroup());
    bool match = true;
    for (int a = 0; a < s.size() && match; ++a)
      for (int b = 0; b < s.size(); ++b) {
        const bool r_q = g.r.same(q.theta(a), q.theta(b));
        const bool l_q = g.l.same(q.theta(a), q.theta(b));
        if (st.rstar.same(a, b) != r_q || r_q != rel.rho.at(a, b) ||
            st.lstar.same(a, b) != l_q || l_q != rel.lambda.at(a, b)) {
          match = false;
          break;
        }
      }
    report.relations_match = match;

    bool congruence = true;
    for (int a = 0; a < s.size() && congruence; ++a)
      for (int b = 0; b < s.size() && congruence; ++b) {
        if (!st.hstar.same(a, b)) continue;
        for (int c = 0; c < s.size(); ++c)
          if (!st.hstar.same(s.product(c, a), s.product(c, b)) ||
              !st.hstar.same(s.product(a, c), s.product(b, c))) {
            congruence = false;
            break;
          }
      }
    report.hstar_congruence = congruence;
  }

  const bool rstar_in_rho = st.rstar.to_relation().subset_of(rel.rho);
  const bool lhs = rstar_in_rho && check_D_dual(s).holds;
  report.reduce_agrees = lhs == report.right_i_order;
  return report;
}

}  // namespace iquo
