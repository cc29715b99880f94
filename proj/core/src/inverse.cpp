#include "iquo/inverse.hpp"

#include <sstream>

namespace iquo {

std::vector<int> idempotents_of(const FiniteSemigroup& s) {
  std::vector<int> out;
  for (int e = 0; e < s.size(); ++e)
    if (s.product(e, e) == e) out.push_back(e);
  return out;
}

bool idempotents_commute(const FiniteSemigroup& s) {
  const auto es = idempotents_of(s);
  for (int e : es)
    for (int f : es)
      if (s.product(e, f) != s.product(f, e)) return false;
  return true;
}

bool nat_leq(const FiniteSemigroup& s, int e, int f) {
  return s.product(e, f) == e && s.product(f, e) == e;
}

bool primitive_idempotents(const FiniteSemigroup& s) {
  const auto es = idempotents_of(s);
  for (int e : es) {
    if (e == 0) continue;
    for (int f : es)
      if (f != 0 && f != e && nat_leq(s, f, e)) return false;
  }
  return true;
}

InverseProfile inverse_profile(const FiniteSemigroup& s) {
  const int n = s.size();
  InverseProfile p;
  p.idempotents = idempotents_of(s);
  p.semilattice = idempotents_commute(s);

  p.regular = true;
  for (int a = 0; a < n && p.regular; ++a) {
    bool found = false;
    for (int x = 0; x < n; ++x)
      if (s.product(s.product(a, x), a) == a) {
        found = true;
        break;
      }
    p.regular = found;
  }

  p.inverse = p.regular && p.semilattice;
  if (p.inverse) {
    p.inv_map.assign(n, -1);
    for (int a = 0; a < n; ++a) {
      for (int x = 0; x < n; ++x)
        if (s.product(s.product(a, x), a) == a && s.product(s.product(x, a), x) == x) {
          if (p.inv_map[a] >= 0)
            throw Error("internal: multiple inverses in a semigroup with commuting idempotents");
          p.inv_map[a] = x;
        }
      if (p.inv_map[a] < 0) throw Error("internal: regular element without an inverse");
    }
  }

  p.primitive = primitive_idempotents(s);
  p.d_components = green(s).d;
  for (const auto& cls : p.d_components.classes)
    if (cls[0] != 0) ++p.nonzero_d_classes;
  p.brandt = p.primitive && p.inverse && p.nonzero_d_classes == 1;
  return p;
}

std::string InverseProfile::to_text() const {
  std::ostringstream out;
  auto yn = [](bool b) { return b ? "YES" : "NO"; };
  out << "REGULAR " << yn(regular) << '\n';
  out << "INVERSE " << yn(inverse) << '\n';
  out << "SEMILATTICE " << yn(semilattice) << '\n';
  out << "PRIMITIVE " << yn(primitive) << '\n';
  out << "BRANDT " << yn(brandt) << '\n';
  out << "IDEMPOTENTS";
  for (int e : idempotents) out << ' ' << e;
  out << '\n';
  out << "NONZERO_D_CLASSES " << nonzero_d_classes << '\n';
  if (inverse) {
    out << "INVERSE_MAP";
    for (int v : inv_map) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

PrimitiveFactsReport primitive_facts_check(const FiniteSemigroup& q, const std::vector<int>& inv) {
  const int n = q.size();
  PrimitiveFactsReport report;
  auto add = [&](const std::string& item, bool pass, std::vector<int> witness) {
    report.items.push_back({item, pass, std::move(witness)});
    report.all_pass = report.all_pass && pass;
  };

  {  // (i) categorical at 0
    auto v = check_A(q);
    add("i_categorical", v.holds, v.holds ? std::vector<int>{} : v.witness);
  }
  {  // (ii) nonzero idempotents meet trivially
    bool pass = true;
    std::vector<int> w;
    for (int e : idempotents_of(q)) {
      if (e == 0) continue;
      for (int f : idempotents_of(q))
        if (f != 0 && q.product(e, f) != 0 && e != f && pass) {
          pass = false;
          w = {e, f};
        }
    }
    add("ii_idempotent_meet", pass, w);
  }
  {  // (iii) nonzero idempotents act as local identities
    bool pass = true;
    std::vector<int> w;
    for (int e : idempotents_of(q)) {
      if (e == 0) continue;
      for (int t = 1; t < n && pass; ++t) {
        if (q.product(e, t) != 0 && q.product(e, t) != t) {
          pass = false;
          w = {e, t};
        }
        if (pass && q.product(t, e) != 0 && q.product(t, e) != t) {
          pass = false;
          w = {t, e};
        }
      }
    }
    add("iii_local_identity", pass, w);
  }
  {  // (iv) as = a forces s = inv(a)a; sa = a forces s = a inv(a)
    bool pass = true;
    std::vector<int> w;
    for (int a = 1; a < n && pass; ++a)
      for (int t = 1; t < n; ++t) {
        if (q.product(a, t) == a && t != q.product(inv[a], a)) {
          pass = false;
          w = {a, t};
          break;
        }
        if (q.product(t, a) == a && t != q.product(a, inv[a])) {
          pass = false;
          w = {t, a};
          break;
        }
      }
    add("iv_stabilizer", pass, w);
  }
  {  // (v) ab != 0 forces inv(a)a = b inv(b)... the shared idempotent
    bool pass = true;
    std::vector<int> w;
    for (int a = 1; a < n && pass; ++a)
      for (int b = 1; b < n; ++b)
        if (q.product(a, b) != 0 &&
            q.product(inv[a], a) != q.product(b, inv[b])) {
          pass = false;
          w = {a, b};
          break;
        }
    add("v_domain_range_match", pass, w);
  }
  return report;
}

std::string PrimitiveFactsReport::to_text() const {
  std::ostringstream out;
  for (const auto& item : items) {
    out << item.item << (item.pass ? " PASS" : " FAIL");
    for (int w : item.witness) out << ' ' << w;
    out << '\n';
  }
  return out.str();
}

Verdict brandt_criterion(const FiniteSemigroup& s) {
  const int n = s.size();
  const auto st = starred(s);
  const auto rel = lambda_rho_tau(s);
  for (int a = 1; a < n; ++a)
    for (int b = 1; b < n; ++b) {
      bool found = false;
      for (int c = 0; c < n && !found; ++c)
        for (int d = 0; d < n; ++d)
          if (st.rstar.same(s.product(c, a), d) && rel.lambda.at(d, b)) {
            found = true;
            break;
          }
      if (!found) return {false, {a, b}};
    }
  return {true, {}};
}

Decomposition zero_direct_union_decompose(const FiniteSemigroup& q) {
  const auto profile = inverse_profile(q);
  if (!profile.inverse || !profile.primitive)
    throw NotPrimitiveInverse("decomposition requires a primitive inverse semigroup");

  Decomposition dec;
  dec.component_of.assign(q.size(), -1);
  for (const auto& cls : profile.d_components.classes) {
    if (cls[0] == 0) continue;  // the zero class
    const int comp = static_cast<int>(dec.components.size());
    std::vector<int> seed = cls;
    seed.push_back(q.zero());
    auto [sub, inclusion] = subsemigroup(q, seed);
    // The D-class with the zero adjoined must already be closed.
    if (sub.size() != static_cast<int>(cls.size()) + 1)
      throw Error("internal: D-component is not closed under the product");
    for (int e : cls) dec.component_of[e] = comp;
    if (!inverse_profile(sub).brandt)
      throw Error("internal: D-component of a primitive inverse semigroup is not Brandt");
    dec.components.push_back(std::move(sub));
    dec.element_maps.push_back(std::move(inclusion));
  }

  // Cross-component products vanish.
  for (int a = 1; a < q.size(); ++a)
    for (int b = 1; b < q.size(); ++b)
      if (dec.component_of[a] != dec.component_of[b] && q.product(a, b) != 0)
        throw Error("internal: nonzero product across D-components");
  return dec;
}

}  // namespace iquo
