#include "iquo/relations.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace iquo {

BinaryRelation BinaryRelation::identity(int n) {
  BinaryRelation r(n);
  for (int a = 0; a < n; ++a) r.set(a, a);
  return r;
}

BinaryRelation BinaryRelation::intersect(const BinaryRelation& other) const {
  BinaryRelation out(n);
  for (size_t i = 0; i < bits.size(); ++i) out.bits[i] = bits[i] & other.bits[i];
  return out;
}

bool BinaryRelation::subset_of(const BinaryRelation& other) const {
  for (size_t i = 0; i < bits.size(); ++i)
    if (bits[i] && !other.bits[i]) return false;
  return true;
}

BinaryRelation Partition::to_relation() const {
  BinaryRelation r(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (class_of[a] == class_of[b]) r.set(a, b);
  return r;
}

Partition Partition::from_ids(const std::vector<int>& raw_ids) {
  Partition p;
  p.n = static_cast<int>(raw_ids.size());
  std::map<int, int> renumber;  // raw id -> canonical id, by least member
  for (int e = 0; e < p.n; ++e)
    if (!renumber.count(raw_ids[e])) {
      int id = static_cast<int>(renumber.size());
      renumber[raw_ids[e]] = id;
      p.classes.emplace_back();
    }
  p.class_of.resize(p.n);
  for (int e = 0; e < p.n; ++e) {
    int id = renumber[raw_ids[e]];
    p.class_of[e] = id;
    p.classes[id].push_back(e);
  }
  return p;
}

namespace {

// Group elements by equal keys; returns canonical class ids.
template <typename Key>
std::vector<int> ids_by_key(const std::vector<Key>& keys) {
  std::map<Key, int> seen;
  std::vector<int> ids(keys.size());
  for (size_t e = 0; e < keys.size(); ++e) {
    auto [it, inserted] = seen.emplace(keys[e], static_cast<int>(seen.size()));
    ids[e] = it->second;
  }
  return ids;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);  // index-ordered unions keep roots deterministic
    parent[b] = a;
  }
};

}  // namespace

GreenRelations green(const FiniteSemigroup& s) {
  const int n = s.size();

  // Principal ideals as membership vectors: aS^1 = {a} u aS, S^1a = {a} u Sa.
  std::vector<std::vector<char>> right_ideal(n, std::vector<char>(n, 0));
  std::vector<std::vector<char>> left_ideal(n, std::vector<char>(n, 0));
  for (int a = 0; a < n; ++a) {
    right_ideal[a][a] = 1;
    left_ideal[a][a] = 1;
    for (int x = 0; x < n; ++x) {
      right_ideal[a][s.product(a, x)] = 1;
      left_ideal[a][s.product(x, a)] = 1;
    }
  }

  GreenRelations g;
  g.r = Partition::from_ids(ids_by_key(right_ideal));
  g.l = Partition::from_ids(ids_by_key(left_ideal));

  std::vector<int> h_ids(n);
  for (int a = 0; a < n; ++a) h_ids[a] = g.r.class_of[a] * n + g.l.class_of[a];
  g.h = Partition::from_ids(h_ids);

  UnionFind uf(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (g.r.same(a, b) || g.l.same(a, b)) uf.unite(a, b);
  std::vector<int> d_ids(n);
  for (int a = 0; a < n; ++a) d_ids[a] = uf.find(a);
  g.d = Partition::from_ids(d_ids);
  return g;
}

StarredRelations starred(const FiniteSemigroup& s) {
  const int n = s.size();
  const int m = n + 1;  // S^1, fresh identity at index n

  // Kernel of a as a partition of S^1 induced by x -> xa, in normal form
  // (values renumbered by first occurrence). Equal normal forms mean equal
  // kernels.
  auto left_kernel = [&](int a) {
    std::vector<int> v(m);
    for (int x = 0; x < n; ++x) v[x] = s.product(x, a);
    v[n] = a;  // 1 * a
    return ids_by_key(v);  // element-wise keys: renumber by first occurrence
  };
  auto right_kernel = [&](int a) {
    std::vector<int> v(m);
    for (int x = 0; x < n; ++x) v[x] = s.product(a, x);
    v[n] = a;
    return ids_by_key(v);
  };

  std::vector<std::vector<int>> lk(n), rk(n);
  for (int a = 0; a < n; ++a) {
    lk[a] = left_kernel(a);
    rk[a] = right_kernel(a);
  }

  StarredRelations st;
  st.rstar = Partition::from_ids(ids_by_key(lk));
  st.lstar = Partition::from_ids(ids_by_key(rk));
  std::vector<int> h_ids(n);
  for (int a = 0; a < n; ++a) h_ids[a] = st.rstar.class_of[a] * n + st.lstar.class_of[a];
  st.hstar = Partition::from_ids(h_ids);
  return st;
}

LambdaRhoTau lambda_rho_tau(const FiniteSemigroup& s) {
  const int n = s.size();

  // Sa and aS as membership vectors (zero excluded: only nonzero common
  // elements count).
  std::vector<std::vector<char>> Sa(n, std::vector<char>(n, 0));
  std::vector<std::vector<char>> aS(n, std::vector<char>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < n; ++x) {
      Sa[a][s.product(x, a)] = 1;
      aS[a][s.product(a, x)] = 1;
    }

  auto meet_nonzero = [n](const std::vector<char>& u, const std::vector<char>& v) {
    for (int e = 1; e < n; ++e)
      if (u[e] && v[e]) return true;
    return false;
  };

  LambdaRhoTau rel{BinaryRelation(n), BinaryRelation(n), BinaryRelation(n)};
  rel.lambda.set(0, 0);
  rel.rho.set(0, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == 0 && b == 0) continue;
      if (meet_nonzero(Sa[a], Sa[b])) rel.lambda.set(a, b);
      if (meet_nonzero(aS[a], aS[b])) rel.rho.set(a, b);
    }
  rel.tau = rel.lambda.intersect(rel.rho);
  return rel;
}

RelationProperties relation_properties(const BinaryRelation& r) {
  RelationProperties p;
  const int n = r.n;

  p.reflexive = true;
  for (int a = 0; a < n && p.reflexive; ++a)
    if (!r.at(a, a)) {
      p.reflexive = false;
      p.reflexivity_witness = a;
    }

  p.symmetric = true;
  for (int a = 0; a < n && p.symmetric; ++a)
    for (int b = 0; b < n; ++b)
      if (r.at(a, b) && !r.at(b, a)) {
        p.symmetric = false;
        p.symmetry_witness = {{a, b}};
        break;
      }

  p.transitive = true;
  for (int a = 0; a < n && p.transitive; ++a)
    for (int b = 0; b < n && p.transitive; ++b) {
      if (!r.at(a, b)) continue;
      for (int c = 0; c < n; ++c)
        if (r.at(b, c) && !r.at(a, c)) {
          p.transitive = false;
          p.transitivity_witness = {{a, b, c}};
          break;
        }
    }

  p.is_equivalence = p.reflexive && p.symmetric && p.transitive;
  return p;
}

Partition to_partition(const BinaryRelation& r) {
  auto props = relation_properties(r);
  if (!props.is_equivalence) throw NotAnEquivalence("relation is not an equivalence");
  UnionFind uf(r.n);
  for (int a = 0; a < r.n; ++a)
    for (int b = a + 1; b < r.n; ++b)
      if (r.at(a, b)) uf.unite(a, b);
  std::vector<int> ids(r.n);
  for (int a = 0; a < r.n; ++a) ids[a] = uf.find(a);
  return Partition::from_ids(ids);
}

}  // namespace iquo
