#include "iquo/semigroup.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace iquo {

std::string ValidationReport::to_text() const {
  std::ostringstream out;
  out << (ok ? "VALID" : "INVALID") << '\n';
  for (const auto& f : failures) {
    switch (f.kind) {
      case ValidationFailure::Kind::Associativity:
        out << "associativity " << f.witness[0] << ' ' << f.witness[1] << ' ' << f.witness[2]
            << '\n';
        break;
      case ValidationFailure::Kind::ZeroLeft:
        out << "zero-left " << f.witness[0] << '\n';
        break;
      case ValidationFailure::Kind::ZeroRight:
        out << "zero-right " << f.witness[0] << '\n';
        break;
    }
  }
  if (truncated) out << "... witness list truncated\n";
  return out.str();
}

ValidationReport validate_table(int n, int zero, const std::vector<int>& table,
                                int max_witnesses) {
  if (n < 1) throw ValidationError("element count must be at least 1");
  if (static_cast<size_t>(n) * n != table.size())
    throw ValidationError("table is not " + std::to_string(n) + "x" + std::to_string(n));
  if (zero < 0 || zero >= n) throw ValidationError("zero index out of range");
  for (int v : table)
    if (v < 0 || v >= n) throw ValidationError("table entry out of range");

  ValidationReport report;
  auto prod = [&](int a, int b) { return table[static_cast<size_t>(a) * n + b]; };
  auto push = [&](ValidationFailure f) {
    if (static_cast<int>(report.failures.size()) < max_witnesses)
      report.failures.push_back(f);
    else
      report.truncated = true;
    report.ok = false;
  };

  for (int j = 0; j < n; ++j) {
    if (prod(zero, j) != zero) push({ValidationFailure::Kind::ZeroLeft, {j, -1, -1}});
    if (prod(j, zero) != zero) push({ValidationFailure::Kind::ZeroRight, {j, -1, -1}});
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int ij = prod(i, j);
      for (int k = 0; k < n; ++k)
        if (prod(ij, k) != prod(i, prod(j, k)))
          push({ValidationFailure::Kind::Associativity, {i, j, k}});
    }
  return report;
}

FiniteSemigroup::FiniteSemigroup() : n_(1), table_{0} {}

FiniteSemigroup::FiniteSemigroup(int n, std::vector<int> table, std::vector<std::string> labels)
    : n_(n), table_(std::move(table)), labels_(std::move(labels)) {
  if (!labels_.empty() &&
      std::all_of(labels_.begin(), labels_.end(), [](const std::string& l) { return l.empty(); }))
    labels_.clear();
}

FiniteSemigroup FiniteSemigroup::from_table(int n, int zero, std::vector<int> table,
                                            std::vector<std::string> labels) {
  auto report = validate_table(n, zero, table);
  if (!report.ok) throw ValidationError("invalid semigroup table:\n" + report.to_text());
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw ValidationError("label count does not match element count");

  if (zero == 0) return FiniteSemigroup(n, std::move(table), std::move(labels));

  // Re-index into canonical form: zero to the front, everything else keeps
  // its relative order.
  std::vector<int> perm(n);  // old index -> new index
  for (int e = 0; e < n; ++e) perm[e] = e == zero ? 0 : (e < zero ? e + 1 : e);
  std::vector<int> t(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      t[static_cast<size_t>(perm[i]) * n + perm[j]] = perm[table[static_cast<size_t>(i) * n + j]];
  std::vector<std::string> l;
  if (!labels.empty()) {
    l.resize(n);
    for (int e = 0; e < n; ++e) l[perm[e]] = std::move(labels[e]);
  }
  return FiniteSemigroup(n, std::move(t), std::move(l));
}

FiniteSemigroup FiniteSemigroup::trusted(int n, std::vector<int> table,
                                         std::vector<std::string> labels) {
  return FiniteSemigroup(n, std::move(table), std::move(labels));
}

std::string FiniteSemigroup::label(int a) const {
  if (!labels_.empty() && !labels_[a].empty()) return labels_[a];
  return std::to_string(a);
}

SubsemigroupResult subsemigroup(const FiniteSemigroup& s, const std::vector<int>& seed,
                                bool adjoin_zero) {
  if (seed.empty()) throw BadIndex("subsemigroup seed must be non-empty");
  const int n = s.size();
  std::vector<char> in(n, 0);
  std::vector<int> work;
  for (int e : seed) {
    if (e < 0 || e >= n) throw BadIndex("seed element out of range");
    if (!in[e]) {
      in[e] = 1;
      work.push_back(e);
    }
  }
  for (size_t i = 0; i < work.size(); ++i)
    for (size_t j = 0; j < work.size(); ++j)
      for (int p : {s.product(work[i], work[j]), s.product(work[j], work[i])})
        if (!in[p]) {
          in[p] = 1;
          work.push_back(p);
        }

  std::vector<int> members;
  for (int e = 0; e < n; ++e)
    if (in[e]) members.push_back(e);

  bool has_zero = in[s.zero()];
  int zero_elem = s.zero();
  if (!has_zero && !adjoin_zero) {
    // The closure may carry its own absorbing element (e.g. a trivial
    // subgroup); otherwise the parent zero is required for a valid result.
    for (int z : members) {
      bool absorbs = true;
      for (int e : members)
        if (s.product(z, e) != z || s.product(e, z) != z) {
          absorbs = false;
          break;
        }
      if (absorbs) {
        has_zero = true;
        zero_elem = z;
        break;
      }
    }
  }
  if (!has_zero) {
    members.insert(members.begin(), s.zero());
    zero_elem = s.zero();
  }

  // Canonical order: zero first, the rest by parent index.
  std::vector<int> inclusion;
  inclusion.push_back(zero_elem);
  for (int e : members)
    if (e != zero_elem) inclusion.push_back(e);

  const int m = static_cast<int>(inclusion.size());
  std::vector<int> back(n, -1);
  for (int i = 0; i < m; ++i) back[inclusion[i]] = i;
  std::vector<int> table(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int p = s.product(inclusion[i], inclusion[j]);
      if (back[p] < 0) p = zero_elem;  // parent zero adjoined artificially
      table[static_cast<size_t>(i) * m + j] = back[p];
    }
  std::vector<std::string> labels;
  if (s.has_labels()) {
    labels.reserve(m);
    for (int e : inclusion) labels.push_back(s.labels()[e]);
  }
  return {FiniteSemigroup::trusted(m, std::move(table), std::move(labels)),
          std::move(inclusion)};
}

namespace {

struct Cursor {
  std::string_view text;
  size_t pos = 0;
  int line = 1;
  int col = 1;

  bool eof() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  void advance() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }
  void skip_spaces() {
    while (!eof() && (peek() == ' ' || peek() == '\t')) advance();
  }
  int read_int() {
    skip_spaces();
    if (eof() || peek() < '0' || peek() > '9')
      throw ParseError("expected a number", line, col);
    long v = 0;
    while (!eof() && peek() >= '0' && peek() <= '9') {
      v = v * 10 + (peek() - '0');
      if (v > 1'000'000) throw ParseError("number too large", line, col);
      advance();
    }
    return static_cast<int>(v);
  }
  void expect_newline() {
    skip_spaces();
    if (eof()) return;  // missing trailing newline tolerated on the last line
    if (peek() != '\n') throw ParseError("expected end of line", line, col);
    advance();
  }
};

}  // namespace

FiniteSemigroup parse_sgp(std::string_view text) {
  Cursor c{text};
  const int n = c.read_int();
  const int zero = c.read_int();
  if (n < 1) throw ParseError("element count must be at least 1", c.line, c.col);
  if (zero < 0 || zero >= n) throw ParseError("zero index out of range", c.line, c.col);
  c.expect_newline();

  std::vector<int> table;
  table.reserve(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int v = c.read_int();
      if (v >= n) throw ParseError("table entry out of range", c.line, c.col);
      table.push_back(v);
    }
    c.expect_newline();
  }

  std::vector<std::string> labels(n);
  bool any_label = false;
  while (true) {
    c.skip_spaces();
    if (c.eof()) break;
    if (c.peek() == '\n') {
      c.advance();
      continue;
    }
    if (c.peek() != '#') throw ParseError("expected '#' label line or end of file", c.line, c.col);
    c.advance();
    const int idx = c.read_int();
    if (idx >= n) throw ParseError("label index out of range", c.line, c.col);
    c.skip_spaces();
    std::string name;
    while (!c.eof() && c.peek() != '\n') {
      name += c.peek();
      c.advance();
    }
    while (!name.empty() && (name.back() == ' ' || name.back() == '\t')) name.pop_back();
    if (name.empty()) throw ParseError("empty label", c.line, c.col);
    labels[idx] = std::move(name);
    any_label = true;
    c.expect_newline();
  }
  if (!any_label) labels.clear();

  return FiniteSemigroup::from_table(n, zero, std::move(table), std::move(labels));
}

std::string serialize_sgp(const FiniteSemigroup& s) {
  std::ostringstream out;
  const int n = s.size();
  out << n << ' ' << s.zero() << '\n';
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j) out << ' ';
      out << s.product(i, j);
    }
    out << '\n';
  }
  if (s.has_labels())
    for (int e = 0; e < n; ++e)
      if (!s.labels()[e].empty()) out << "# " << e << ' ' << s.labels()[e] << '\n';
  return out.str();
}

}  // namespace iquo
