#include "iquo/quotient.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "iquo/inverse.hpp"

namespace iquo {

std::vector<SigmaPair> build_sigma(const FiniteSemigroup& s, const Partition& rstar) {
  std::vector<SigmaPair> sigma;
  sigma.push_back({0, 0});
  for (int a = 1; a < s.size(); ++a)
    for (int b = 1; b < s.size(); ++b)
      if (rstar.same(a, b)) sigma.push_back({a, b});
  std::sort(sigma.begin(), sigma.end());
  return sigma;
}

namespace {

// leftmul[c][t] = ascending list of x with xc = t, for nonzero c and t.
struct LeftMultipliers {
  int n;
  std::vector<std::vector<std::vector<int>>> by_target;

  explicit LeftMultipliers(const FiniteSemigroup& s) : n(s.size()) {
    by_target.assign(n, {});
    for (int c = 1; c < n; ++c) {
      by_target[c].assign(n, {});
      for (int x = 1; x < n; ++x) {
        const int t = s.product(x, c);
        if (t != 0) by_target[c][t].push_back(x);
      }
    }
  }
};

// (a,b) ~ (c,d) for nonzero pairs, via the adjacency lists.
bool sim_related(const FiniteSemigroup& s, const LeftMultipliers& lm, SigmaPair p, SigmaPair q) {
  for (int x = 1; x < s.size(); ++x) {
    const int t = s.product(x, p.a);
    if (t == 0) continue;
    for (int y : lm.by_target[q.a][t]) {
      const int xb = s.product(x, p.b);
      if (xb != 0 && xb == s.product(y, q.b)) return true;
    }
  }
  return false;
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
    if (a > b) std::swap(a, b);
    parent[b] = a;
  }
};

}  // namespace

SimPartition sim_partition(const FiniteSemigroup& s, const std::vector<SigmaPair>& sigma) {
  const int m = static_cast<int>(sigma.size());
  const LeftMultipliers lm(s);

  // Pairwise relation over Sigma; index 0 is (0,0), related only to itself.
  std::vector<char> rel(static_cast<size_t>(m) * m, 0);
  auto rel_at = [&](int i, int j) -> char& { return rel[static_cast<size_t>(i) * m + j]; };
  rel_at(0, 0) = 1;
  for (int i = 1; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      const bool r = sim_related(s, lm, sigma[i], sigma[j]);
      rel_at(i, j) = rel_at(j, i) = r ? 1 : 0;
    }
    if (!rel_at(i, i))
      throw NotAnEquivalence("~ is not reflexive on Sigma*; S fails condition (D)");
  }

  UnionFind uf(m);
  for (int i = 1; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (rel_at(i, j)) uf.unite(i, j);

  // Pairwise ~ must already equal its transitive closure.
  for (int i = 1; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if ((uf.find(i) == uf.find(j)) != (rel_at(i, j) != 0))
        throw NotAnEquivalence("~ is not transitive; S fails one of (A)-(C)");

  SimPartition sim;
  sim.n = s.size();
  sim.pair_class.assign(static_cast<size_t>(s.size()) * s.size(), -1);

  // Classes ordered by least member pair; sigma is sorted, so roots appear
  // in canonical order as we sweep.
  std::map<int, int> root_to_class;
  root_to_class[0] = 0;
  sim.classes.push_back({sigma[0]});
  for (int i = 1; i < m; ++i) {
    const int root = uf.find(i);
    auto [it, inserted] = root_to_class.emplace(root, static_cast<int>(sim.classes.size()));
    if (inserted) sim.classes.emplace_back();
    if (it->second != 0) sim.classes[it->second].push_back(sigma[i]);
  }
  for (size_t cls = 0; cls < sim.classes.size(); ++cls)
    for (const SigmaPair& p : sim.classes[cls])
      sim.pair_class[static_cast<size_t>(p.a) * s.size() + p.b] = static_cast<int>(cls);
  return sim;
}

namespace {

// Shared product routine: cached lambda relation and left-multiplier lists.
struct Multiplier {
  const FiniteSemigroup& s;
  const SimPartition& sim;
  BinaryRelation lambda;
  LeftMultipliers lm;

  Multiplier(const FiniteSemigroup& s, const SimPartition& sim)
      : s(s), sim(sim), lambda(lambda_rho_tau(s).lambda), lm(s) {}

  int multiply(int c1, int c2) const {
    if (c1 == 0 || c2 == 0) return 0;
    const auto [a, b] = sim.canonical_rep(c1);
    const auto [c, d] = sim.canonical_rep(c2);
    if (!lambda.at(b, c)) return 0;
    for (int x = 1; x < s.size(); ++x) {
      const int t = s.product(x, b);
      if (t == 0) continue;
      for (int y : lm.by_target[c][t]) {
        const int cls = sim.class_of({s.product(x, a), s.product(y, d)});
        if (cls < 0) throw Error("internal: product pair escaped Sigma");
        return cls;
      }
    }
    throw Error("internal: lambda-related elements admit no multiplication witness");
  }
};

}  // namespace

int quotient_multiply(const FiniteSemigroup& s, const SimPartition& sim, int class1, int class2) {
  return Multiplier(s, sim).multiply(class1, class2);
}

QuotientSemigroup build_quotient(const FiniteSemigroup& s) {
  {
    auto report = profile(s);
    if (!report.left_i_quotient) throw ConditionsNotSatisfied(std::move(report));
  }

  QuotientSemigroup out;
  out.s_ = s;
  const auto st = starred(s);
  out.sim_ = sim_partition(s, build_sigma(s, st.rstar));
  const SimPartition& sim = out.sim_;
  const int nq = sim.class_count();

  const Multiplier mult(s, sim);
  std::vector<int> table(static_cast<size_t>(nq) * nq, 0);
  for (int i = 0; i < nq; ++i)
    for (int j = 0; j < nq; ++j) table[static_cast<size_t>(i) * nq + j] = mult.multiply(i, j);

  std::vector<std::string> labels(nq);
  for (int q = 0; q < nq; ++q) {
    const auto [a, b] = sim.canonical_rep(q);
    labels[q] = "[" + std::to_string(a) + "," + std::to_string(b) + "]";
  }

  // Never trust the theorem: re-validate the constructed table outright.
  if (auto rep = validate_table(nq, 0, table); !rep.ok)
    throw Error("internal: constructed quotient table invalid:\n" + rep.to_text());
  out.q_ = FiniteSemigroup::trusted(nq, std::move(table), std::move(labels));

  out.inv_.assign(nq, 0);
  for (int q = 1; q < nq; ++q) {
    const auto [a, b] = sim.canonical_rep(q);
    out.inv_[q] = sim.class_of({b, a});
    if (out.inv_[q] < 0) throw Error("internal: inverse pair escaped Sigma");
  }

  out.theta_.assign(s.size(), 0);
  for (int a = 1; a < s.size(); ++a) {
    int cls = -1;
    for (int x = 1; x < s.size() && cls < 0; ++x)
      if (s.product(x, a) != 0) cls = sim.class_of({x, s.product(x, a)});
    if (cls < 0) throw Error("internal: condition (D) should have provided a multiplier");
    out.theta_[a] = cls;
  }

  // Structural verification of the construction.
  const auto prof = inverse_profile(out.q_);
  if (!prof.regular) throw Error("internal: constructed quotient is not regular");
  if (!prof.semilattice) throw Error("internal: quotient idempotents do not commute");
  if (!prof.inverse) throw Error("internal: constructed quotient is not inverse");
  if (!prof.primitive) throw Error("internal: constructed quotient is not primitive");
  if (prof.inv_map != out.inv_)
    throw Error("internal: [b,a] disagrees with the unique inverse of [a,b]");
  {
    // E(Q*) is exactly {[a,a] : a in S*}.
    std::vector<char> expected(nq, 0);
    expected[0] = 1;
    for (int a = 1; a < s.size(); ++a) expected[sim.class_of({a, a})] = 1;
    for (int q = 0; q < nq; ++q) {
      const bool idem = out.q_.product(q, q) == q;
      if (idem != (expected[q] != 0))
        throw Error("internal: idempotents of Q are not the diagonal classes");
    }
  }
  for (int a = 0; a < s.size(); ++a) {
    for (int b = 0; b < s.size(); ++b)
      if (out.theta_[s.product(a, b)] != out.q_.product(out.theta_[a], out.theta_[b]))
        throw Error("internal: theta is not a homomorphism");
    for (int b = a + 1; b < s.size(); ++b)
      if (out.theta_[a] == out.theta_[b]) throw Error("internal: theta is not injective");
  }
  return out;
}

std::string LeftIOrderReport::to_text() const {
  std::ostringstream out;
  out << "LEFT_I_ORDER " << (ok ? "YES" : "NO") << '\n';
  if (unreachable) out << "UNREACHABLE " << *unreachable << '\n';
  out << "STRAIGHT " << (straight ? "YES" : "NO") << '\n';
  for (size_t q = 0; q < decomposition.size(); ++q)
    out << "FACTOR " << q << ' ' << decomposition[q][0] << ' ' << decomposition[q][1] << '\n';
  return out.str();
}

LeftIOrderReport verify_left_i_order(const FiniteSemigroup& s, const FiniteSemigroup& q,
                                     const std::vector<int>& emb) {
  if (static_cast<int>(emb.size()) != s.size())
    throw PreconditionUnverified("embedding size does not match S");
  for (int a = 0; a < s.size(); ++a) {
    if (emb[a] < 0 || emb[a] >= q.size()) throw PreconditionUnverified("embedding out of range");
    for (int b = 0; b < s.size(); ++b)
      if (emb[s.product(a, b)] != q.product(emb[a], emb[b]))
        throw PreconditionUnverified("embedding is not a homomorphism");
    for (int b = a + 1; b < s.size(); ++b)
      if (emb[a] == emb[b]) throw PreconditionUnverified("embedding is not injective");
  }
  const auto prof = inverse_profile(q);
  if (!prof.inverse) throw PreconditionUnverified("target is not an inverse semigroup");

  const auto g = green(q);
  LeftIOrderReport report;
  report.ok = true;
  report.straight = true;
  report.decomposition.assign(q.size(), {-1, -1});
  for (int el = 0; el < q.size(); ++el) {
    bool found = false;
    for (int a = 0; a < s.size() && !found; ++a)
      for (int b = 0; b < s.size(); ++b)
        if (q.product(prof.inv_map[emb[a]], emb[b]) == el) {
          report.decomposition[el] = {a, b};
          if (!g.r.same(emb[a], emb[b])) report.straight = false;
          found = true;
          break;
        }
    if (!found) {
      report.ok = false;
      report.straight = false;
      if (!report.unreachable) report.unreachable = el;
    }
  }
  return report;
}

bool verify_well_definedness(const QuotientSemigroup& q) {
  const FiniteSemigroup& s = q.source();
  const SimPartition& sim = q.sim();
  const auto lambda = lambda_rho_tau(s).lambda;

  for (int c1 = 1; c1 < sim.class_count(); ++c1)
    for (int c2 = 1; c2 < sim.class_count(); ++c2) {
      const int expected = q.multiply(c1, c2);
      for (const auto [a, b] : sim.classes[c1])
        for (const auto [c, d] : sim.classes[c2]) {
          if (!lambda.at(b, c)) {
            if (expected != 0) return false;
            continue;
          }
          bool witnessed = false;
          for (int x = 1; x < s.size(); ++x)
            for (int y = 1; y < s.size(); ++y) {
              if (s.product(x, b) == 0 || s.product(x, b) != s.product(y, c)) continue;
              witnessed = true;
              if (sim.class_of({s.product(x, a), s.product(y, d)}) != expected) return false;
            }
          if (!witnessed || expected == 0) return false;
        }
    }
  return true;
}

bool verify_translation_collapse(const QuotientSemigroup& q) {
  const FiniteSemigroup& s = q.source();
  const SimPartition& sim = q.sim();
  for (int cls = 1; cls < sim.class_count(); ++cls)
    for (const auto [a, b] : sim.classes[cls])
      for (int x = 1; x < s.size(); ++x) {
        const int xa = s.product(x, a), xb = s.product(x, b);
        if (xa == 0) continue;
        if (xb == 0) return false;  // conc(i): a R* b forces xb != 0
        if (sim.class_of({xa, xb}) != cls) return false;
      }
  return true;
}

bool verify_witness_transfer(const FiniteSemigroup& fs) {
  const int n = fs.size();
  for (int a = 1; a < n; ++a)
    for (int b = 1; b < n; ++b)
      for (int c = 1; c < n; ++c)
        for (int d = 1; d < n; ++d)
          for (int s = 1; s < n; ++s)
            for (int t = 1; t < n; ++t) {
              if (fs.product(s, a) == 0 || fs.product(s, a) != fs.product(t, c)) continue;
              if (fs.product(s, b) == 0 || fs.product(s, b) != fs.product(t, d)) continue;
              for (int x = 1; x < n; ++x)
                for (int y = 1; y < n; ++y) {
                  if (fs.product(x, a) == 0 || fs.product(x, a) != fs.product(y, c)) continue;
                  if (fs.product(x, b) == 0 || fs.product(x, b) != fs.product(y, d)) return false;
                }
            }
  return true;
}

bool verify_theta_factorization(const QuotientSemigroup& q) {
  const FiniteSemigroup& s = q.source();
  for (int a = 1; a < s.size(); ++a)
    for (int b = 1; b < s.size(); ++b) {
      const int cls = q.class_of({a, b});
      if (cls < 0) continue;  // (a,b) outside Sigma
      if (q.multiply(q.inverse(q.theta(a)), q.theta(b)) != cls) return false;
    }
  return true;
}

bool verify_idempotent_source(const QuotientSemigroup& q) {
  const FiniteSemigroup& s = q.source();
  for (int e = 1; e < q.size(); ++e) {
    if (q.multiply(e, e) != e) continue;
    bool found = false;
    for (int a = 1; a < s.size() && !found; ++a)
      found = q.multiply(q.inverse(q.theta(a)), q.theta(a)) == e;
    if (!found) return false;
  }
  return true;
}

bool verify_quotient_corollaries(const QuotientSemigroup& q) {
  const FiniteSemigroup& s = q.source();
  const auto g = green(q.semigroup());
  const auto lambda = lambda_rho_tau(s).lambda;

  auto factor = [&](int a, int b) { return q.multiply(q.inverse(q.theta(a)), q.theta(b)); };

  for (int a = 1; a < s.size(); ++a)
    for (int b = 1; b < s.size(); ++b) {
      if (factor(a, b) != 0 && !g.r.same(q.theta(a), q.theta(b))) return false;
      for (int c = 1; c < s.size(); ++c)
        for (int d = 1; d < s.size(); ++d) {
          const int q1 = factor(a, b), q2 = factor(c, d);
          if (q1 == 0 || q2 == 0) continue;
          if (g.r.same(q1, q2) != lambda.at(a, c)) return false;
          if (g.l.same(q1, q2) != lambda.at(b, d)) return false;
        }
    }
  return true;
}

bool verify_order_identities(const QuotientSemigroup& q) {
  const FiniteSemigroup& s = q.source();
  if (q.theta(0) != 0) return false;

  const auto g = green(q.semigroup());
  const auto rel = lambda_rho_tau(s);
  const auto st = starred(s);

  for (int a = 0; a < s.size(); ++a)
    for (int b = 0; b < s.size(); ++b) {
      if (g.l.same(q.theta(a), q.theta(b)) != rel.lambda.at(a, b)) return false;
      if (g.r.same(q.theta(a), q.theta(b)) != st.rstar.same(a, b)) return false;
      if (rel.rho.at(a, b) && !st.rstar.same(a, b)) return false;
    }
  return check_D(s).holds;
}

}  // namespace iquo
