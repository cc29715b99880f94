#include "iquo/builders.hpp"

#include <algorithm>
#include <numeric>

namespace iquo {

GroupTable GroupTable::from_table(int m, std::vector<int> table, std::vector<std::string> labels) {
  if (m < 1) throw ValidationError("group order must be at least 1");
  if (static_cast<size_t>(m) * m != table.size()) throw ValidationError("group table is not square");
  for (int v : table)
    if (v < 0 || v >= m) throw ValidationError("group table entry out of range");

  auto prod = [&](int a, int b) { return table[static_cast<size_t>(a) * m + b]; };
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        if (prod(prod(a, b), c) != prod(a, prod(b, c)))
          throw ValidationError("group table is not associative");

  int identity = -1;
  for (int e = 0; e < m; ++e) {
    bool ok = true;
    for (int a = 0; a < m; ++a)
      if (prod(e, a) != a || prod(a, e) != a) {
        ok = false;
        break;
      }
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) throw ValidationError("group table has no identity");
  for (int a = 0; a < m; ++a) {
    bool has_inverse = false;
    for (int b = 0; b < m; ++b)
      if (prod(a, b) == identity && prod(b, a) == identity) {
        has_inverse = true;
        break;
      }
    if (!has_inverse) throw ValidationError("group table element has no inverse");
  }

  GroupTable g;
  g.m = m;
  g.table = std::move(table);
  g.identity = identity;
  if (labels.empty()) {
    labels.resize(m);
    for (int a = 0; a < m; ++a) labels[a] = a == identity ? "e" : "g" + std::to_string(a);
  }
  g.labels = std::move(labels);
  return g;
}

GroupTable trivial_group() { return {}; }

GroupTable cyclic_group(int m) {
  if (m < 1) throw ValidationError("group order must be at least 1");
  std::vector<int> table(static_cast<size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) table[static_cast<size_t>(a) * m + b] = (a + b) % m;
  std::vector<std::string> labels(m);
  labels[0] = "e";
  for (int a = 1; a < m; ++a) labels[a] = a == 1 ? "g" : "g" + std::to_string(a);
  GroupTable g;
  g.m = m;
  g.table = std::move(table);
  g.identity = 0;
  g.labels = std::move(labels);
  return g;
}

FiniteSemigroup brandt(const GroupTable& g, int k) {
  if (k < 1) throw BadIndex("index set size must be at least 1");
  const int m = g.m;
  const int n = k * k * m + 1;

  // zero first, then (i,g,j) sorted by (i,j,g); i,j are 1-based in labels.
  auto idx = [&](int i, int a, int j) { return 1 + ((i * k + j) * m + a); };

  std::vector<int> table(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (int a = 0; a < m; ++a)
        for (int l = 0; l < k; ++l)
          for (int t = 0; t < k; ++t)
            for (int b = 0; b < m; ++b)
              if (j == l)
                table[static_cast<size_t>(idx(i, a, j)) * n + idx(l, b, t)] =
                    idx(i, g.product(a, b), t);

  std::vector<std::string> labels(n);
  labels[0] = "0";
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (int a = 0; a < m; ++a)
        labels[idx(i, a, j)] = "(" + std::to_string(i + 1) + "," + g.labels[a] + "," +
                               std::to_string(j + 1) + ")";

  return FiniteSemigroup::trusted(n, std::move(table), std::move(labels));
}

FiniteSemigroup group_with_zero(const GroupTable& g) {
  const int m = g.m;
  const int n = m + 1;
  std::vector<int> table(static_cast<size_t>(n) * n, 0);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      table[static_cast<size_t>(a + 1) * n + (b + 1)] = g.product(a, b) + 1;
  std::vector<std::string> labels(n);
  labels[0] = "0";
  for (int a = 0; a < m; ++a) labels[a + 1] = g.labels[a];
  return FiniteSemigroup::trusted(n, std::move(table), std::move(labels));
}

FixtureResult example_fixture(const GroupTable& g, int k, int i) {
  if (k < 2) throw BadIndex("the example fixture requires an index set of size at least 2");
  if (i < 1 || i > k) throw BadIndex("row index out of range");
  FiniteSemigroup ambient = brandt(g, k);
  const int m = g.m;
  auto idx = [&](int row, int a, int j) { return 1 + ((row * k + j) * m + a); };
  std::vector<int> seed;
  for (int j = 0; j < k; ++j)
    for (int a = 0; a < m; ++a) seed.push_back(idx(i - 1, a, j));
  auto [sub, inclusion] = subsemigroup(ambient, seed);
  return {std::move(sub), std::move(inclusion), std::move(ambient)};
}

FiniteSemigroup zero_direct_union(const std::vector<FiniteSemigroup>& parts) {
  int n = 1;
  for (const auto& p : parts) n += p.size() - 1;

  std::vector<int> offset(parts.size());  // index of part's element 1 in the union
  {
    int at = 1;
    for (size_t p = 0; p < parts.size(); ++p) {
      offset[p] = at;
      at += parts[p].size() - 1;
    }
  }

  std::vector<int> table(static_cast<size_t>(n) * n, 0);
  std::vector<std::string> labels(n);
  labels[0] = "0";
  bool any_label = false;
  for (size_t p = 0; p < parts.size(); ++p) {
    const auto& part = parts[p];
    const int base = offset[p] - 1;  // part element e >= 1 lands at base + e
    for (int a = 1; a < part.size(); ++a)
      for (int b = 1; b < part.size(); ++b) {
        const int ab = part.product(a, b);
        table[static_cast<size_t>(base + a) * n + (base + b)] = ab == 0 ? 0 : base + ab;
      }
    for (int a = 1; a < part.size(); ++a)
      if (part.has_labels()) {
        labels[base + a] = std::to_string(p + 1) + ":" + part.labels()[a];
        any_label = true;
      }
  }
  if (!any_label) labels.clear();
  return FiniteSemigroup::trusted(n, std::move(table), std::move(labels));
}

namespace {

bool associative_with_zero(const std::vector<int>& table, int n) {
  auto prod = [&](int a, int b) { return table[static_cast<size_t>(a) * n + b]; };
  for (int a = 1; a < n; ++a)
    for (int b = 1; b < n; ++b) {
      const int ab = prod(a, b);
      for (int c = 1; c < n; ++c)
        if (prod(ab, c) != prod(a, prod(b, c))) return false;
    }
  return true;  // triples touching 0 hold by absorption
}

// Least table among relabelings by permutations of the nonzero elements.
bool lexicographically_least(const std::vector<int>& table, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> image(static_cast<size_t>(n) * n);
  while (std::next_permutation(perm.begin() + 1, perm.end())) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        image[static_cast<size_t>(perm[i]) * n + perm[j]] =
            perm[table[static_cast<size_t>(i) * n + j]];
    if (image < table) return false;
  }
  return true;
}

}  // namespace

void enumerate_semigroups_with_zero(int n, const std::function<void(const FiniteSemigroup&)>& sink,
                                    const EnumerateOptions& opts) {
  if (n < 1) throw BadIndex("order must be at least 1");
  if (n > opts.max_order)
    throw TooLarge("full enumeration at order " + std::to_string(n) +
                   " exceeds the cap of " + std::to_string(opts.max_order));

  std::vector<int> table(static_cast<size_t>(n) * n, 0);
  const int free_cells = (n - 1) * (n - 1);

  // Odometer over the (n-1)^2 free entries, row-major, so the flattened
  // table stream is lexicographic.
  std::vector<int> digits(free_cells, 0);
  auto apply = [&]() {
    int k = 0;
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j) table[static_cast<size_t>(i) * n + j] = digits[k++];
  };

  while (true) {
    apply();
    if (associative_with_zero(table, n) &&
        (!opts.up_to_isomorphism || lexicographically_least(table, n))) {
      FiniteSemigroup s = FiniteSemigroup::trusted(n, table);
      if (!opts.predicate || opts.predicate(s)) sink(s);
    }
    int pos = free_cells - 1;
    while (pos >= 0 && digits[pos] == n - 1) digits[pos--] = 0;
    if (pos < 0) break;
    ++digits[pos];
  }
}

std::vector<FiniteSemigroup> enumerate_all(int n, const EnumerateOptions& opts) {
  std::vector<FiniteSemigroup> out;
  enumerate_semigroups_with_zero(n, [&](const FiniteSemigroup& s) { out.push_back(s); }, opts);
  return out;
}

}  // namespace iquo
