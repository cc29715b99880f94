#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "iquo/abundance.hpp"
#include "iquo/builders.hpp"
#include "iquo/conditions.hpp"
#include "iquo/inverse.hpp"
#include "iquo/morphisms.hpp"
#include "iquo/quotient.hpp"
#include "iquo/relations.hpp"
#include "iquo/semigroup.hpp"
#include "selftest.hpp"

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw iquo::Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw iquo::Error("cannot write " + path);
  out << text;
}

iquo::FiniteSemigroup load(const std::string& path) { return iquo::parse_sgp(read_file(path)); }

iquo::GroupTable group_by_name(const std::string& name) {
  if (name == "trivial" || name == "c1") return iquo::trivial_group();
  if (name.size() > 1 && name[0] == 'c') {
    const int m = std::stoi(name.substr(1));
    return iquo::cyclic_group(m);
  }
  throw iquo::Error("unknown group '" + name + "' (use trivial or cN)");
}

std::vector<iquo::Cond> parse_where(const std::string& expr) {
  std::vector<iquo::Cond> conds;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    bool found = false;
    for (iquo::Cond c : iquo::kAllConds)
      if (token == iquo::cond_name(c)) {
        conds.push_back(c);
        found = true;
      }
    if (!found) throw iquo::Error("unknown condition '" + token + "' in --where");
    token.clear();
  };
  for (char ch : expr) {
    if (ch == ',' || ch == '&' || ch == ' ')
      flush();
    else
      token += ch;
  }
  flush();
  return conds;
}

void print_partition(std::ostream& out, const std::string& name, const iquo::Partition& p) {
  out << name;
  for (const auto& cls : p.classes) {
    out << " {";
    for (size_t i = 0; i < cls.size(); ++i) out << (i ? "," : "") << cls[i];
    out << "}";
  }
  out << '\n';
}

void print_relation(std::ostream& out, const std::string& name, const iquo::BinaryRelation& r) {
  const auto props = iquo::relation_properties(r);
  out << name << " reflexive=" << (props.reflexive ? "YES" : "NO")
      << " symmetric=" << (props.symmetric ? "YES" : "NO")
      << " transitive=" << (props.transitive ? "YES" : "NO") << '\n';
  for (int a = 0; a < r.n; ++a) {
    out << name << ' ' << a;
    for (int b = 0; b < r.n; ++b) out << ' ' << (r.at(a, b) ? 1 : 0);
    out << '\n';
  }
}

int cmd_validate(const std::string& path, int max_witnesses) {
  const std::string text = read_file(path);
  // Deliberately parse by hand so invalid tables are reported, not thrown.
  std::istringstream in(text);
  int n = 0, zero = 0;
  if (!(in >> n >> zero)) throw iquo::Error("cannot read header of " + path);
  std::vector<int> table;
  int v;
  while (in >> v) table.push_back(v);
  const auto report = iquo::validate_table(n, zero, table, max_witnesses);
  std::cout << report.to_text();
  return report.ok ? kExitTrue : kExitFalse;
}

int cmd_relations(const std::string& path) {
  const auto s = load(path);
  const auto g = iquo::green(s);
  const auto st = iquo::starred(s);
  const auto rel = iquo::lambda_rho_tau(s);
  print_partition(std::cout, "R", g.r);
  print_partition(std::cout, "L", g.l);
  print_partition(std::cout, "H", g.h);
  print_partition(std::cout, "D", g.d);
  print_partition(std::cout, "RSTAR", st.rstar);
  print_partition(std::cout, "LSTAR", st.lstar);
  print_partition(std::cout, "HSTAR", st.hstar);
  print_relation(std::cout, "LAMBDA", rel.lambda);
  print_relation(std::cout, "RHO", rel.rho);
  print_relation(std::cout, "TAU", rel.tau);
  return kExitTrue;
}

int cmd_check(const std::string& path) {
  const auto s = load(path);
  const auto report = iquo::profile(s);
  std::cout << report.to_text();
  return report.left_i_quotient ? kExitTrue : kExitFalse;
}

int cmd_quotient(const std::string& path, const std::string& out_path) {
  const auto s = load(path);
  iquo::QuotientSemigroup q = [&] {
    try {
      return iquo::build_quotient(s);
    } catch (const iquo::ConditionsNotSatisfied& e) {
      std::cout << e.report.to_text();
      std::exit(kExitFalse);
    }
  }();

  std::ostringstream mapping;
  for (int cls = 0; cls < q.size(); ++cls) {
    const auto [a, b] = q.canonical_rep(cls);
    mapping << "class " << cls << " (" << a << "," << b << ")\n";
  }
  for (int a = 0; a < s.size(); ++a) mapping << "theta " << a << ' ' << q.theta(a) << '\n';

  const std::string sgp = iquo::serialize_sgp(q.semigroup());
  if (out_path.empty()) {
    std::cout << sgp << '\n' << mapping.str();
  } else {
    write_file(out_path, sgp);
    write_file(out_path + ".map", mapping.str());
  }
  return kExitTrue;
}

int cmd_analyze(const std::string& path) {
  const auto s = load(path);
  std::cout << iquo::inverse_profile(s).to_text();
  return kExitTrue;
}

int cmd_decompose(const std::string& path, const std::string& prefix) {
  const auto s = load(path);
  iquo::Decomposition dec = [&] {
    try {
      return iquo::zero_direct_union_decompose(s);
    } catch (const iquo::NotPrimitiveInverse& e) {
      std::cout << "NOT-PRIMITIVE-INVERSE\n";
      std::exit(kExitFalse);
    }
  }();
  std::cout << "components " << dec.components.size() << '\n';
  for (size_t c = 0; c < dec.components.size(); ++c) {
    std::cout << "component " << c + 1 << " size " << dec.components[c].size() << " elements";
    for (size_t i = 1; i < dec.element_maps[c].size(); ++i)
      std::cout << ' ' << dec.element_maps[c][i];
    std::cout << '\n';
  }
  for (size_t c = 0; c < dec.components.size(); ++c) {
    const std::string sgp = iquo::serialize_sgp(dec.components[c]);
    if (prefix.empty())
      std::cout << '\n' << sgp;
    else
      write_file(prefix + std::to_string(c + 1) + ".sgp", sgp);
  }
  return kExitTrue;
}

int cmd_iso(const std::string& path1, const std::string& path2, const std::string& pin_path) {
  const auto q1 = load(path1);
  const auto q2 = load(path2);
  std::vector<int> pinned;
  if (!pin_path.empty()) {
    pinned.assign(q1.size(), -1);
    std::istringstream in(read_file(pin_path));
    int a, b;
    while (in >> a >> b) {
      if (a < 0 || a >= q1.size() || b < 0 || b >= q2.size())
        throw iquo::Error("pin entry out of range");
      pinned[a] = b;
    }
  }
  const auto iso = iquo::find_isomorphism(q1, q2, pinned);
  if (!iso) {
    std::cout << "NOT-ISOMORPHIC\n";
    return kExitFalse;
  }
  std::cout << "ISOMORPHIC\n";
  for (int a = 0; a < q1.size(); ++a) std::cout << a << ' ' << (*iso)[a] << '\n';
  return kExitTrue;
}

int cmd_abundance(const std::string& path) {
  const auto s = load(path);
  std::cout << iquo::abundance_profile(s).to_text();
  std::cout << iquo::abundant_classification(s).to_text();
  return kExitTrue;
}

int cmd_enumerate(int order, const std::string& where, bool up_to_iso) {
  const auto conds = where.empty() ? std::vector<iquo::Cond>{} : parse_where(where);
  iquo::EnumerateOptions opts;
  opts.up_to_isomorphism = up_to_iso;
  if (!conds.empty())
    opts.predicate = [conds](const iquo::FiniteSemigroup& s) {
      for (iquo::Cond c : conds)
        if (!iquo::check(s, c).holds) return false;
      return true;
    };
  bool first = true;
  iquo::enumerate_semigroups_with_zero(order, [&](const iquo::FiniteSemigroup& s) {
    if (!first) std::cout << '\n';
    std::cout << iquo::serialize_sgp(s);
    first = false;
  }, opts);
  return kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite semigroup toolkit for primitive inverse left I-quotients"};
  app.require_subcommand(1);

  std::string path, path2, out_path, pin_path, prefix, where, group_name = "trivial";
  int max_witnesses = 16, order = 3, k = 2, row = 1;
  bool up_to_iso = false;
  std::vector<std::string> union_paths;

  auto* validate = app.add_subcommand("validate", "validate a .sgp table");
  validate->add_option("input", path)->required();
  validate->add_option("--max-witnesses", max_witnesses);

  auto* relations = app.add_subcommand("relations", "Green's, starred and lambda/rho/tau relations");
  relations->add_option("input", path)->required();

  auto* check = app.add_subcommand("check", "decide conditions (A)-(D) and friends");
  check->add_option("input", path)->required();

  auto* quotient = app.add_subcommand("quotient", "construct the primitive inverse quotient");
  quotient->add_option("input", path)->required();
  quotient->add_option("-o,--output", out_path);

  auto* analyze = app.add_subcommand("analyze", "regular/inverse/primitive/Brandt profile");
  analyze->add_option("input", path)->required();

  auto* decompose = app.add_subcommand("decompose", "split into Brandt components");
  decompose->add_option("input", path)->required();
  decompose->add_option("-o,--out-prefix", prefix);

  auto* iso = app.add_subcommand("iso", "search for an isomorphism");
  iso->add_option("first", path)->required();
  iso->add_option("second", path2)->required();
  iso->add_option("--pin", pin_path);

  auto* abundance = app.add_subcommand("abundance", "abundance/adequacy/ample profile");
  abundance->add_option("input", path)->required();

  auto* make = app.add_subcommand("make", "build standard semigroups");
  std::string kind;
  make->add_option("kind", kind, "brandt|g0|example|union")->required();
  make->add_option("inputs", union_paths, "parts for union");
  make->add_option("--group", group_name, "trivial or cN");
  make->add_option("--k", k, "index set size");
  make->add_option("--i", row, "fixture row (1-based)");
  make->add_option("-o,--output", out_path);

  auto* enumerate = app.add_subcommand("enumerate", "stream small semigroups with zero");
  enumerate->add_option("--order", order)->required();
  enumerate->add_option("--where", where, "conjunction of condition names");
  enumerate->add_flag("--up-to-iso", up_to_iso);

  auto* selftest = app.add_subcommand("selftest", "run invariant suites on built-in fixtures");
  (void)selftest;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (validate->parsed()) return cmd_validate(path, max_witnesses);
    if (relations->parsed()) return cmd_relations(path);
    if (check->parsed()) return cmd_check(path);
    if (quotient->parsed()) return cmd_quotient(path, out_path);
    if (analyze->parsed()) return cmd_analyze(path);
    if (decompose->parsed()) return cmd_decompose(path, prefix);
    if (iso->parsed()) return cmd_iso(path, path2, pin_path);
    if (abundance->parsed()) return cmd_abundance(path);
    if (make->parsed()) {
      iquo::FiniteSemigroup s;
      if (kind == "brandt") {
        s = iquo::brandt(group_by_name(group_name), k);
      } else if (kind == "g0") {
        s = iquo::group_with_zero(group_by_name(group_name));
      } else if (kind == "example") {
        s = iquo::example_fixture(group_by_name(group_name), k, row).sub;
      } else if (kind == "union") {
        std::vector<iquo::FiniteSemigroup> parts;
        for (const auto& p : union_paths) parts.push_back(load(p));
        s = iquo::zero_direct_union(parts);
      } else {
        throw iquo::Error("unknown make kind '" + kind + "'");
      }
      const std::string sgp = iquo::serialize_sgp(s);
      if (out_path.empty())
        std::cout << sgp;
      else
        write_file(out_path, sgp);
      return kExitTrue;
    }
    if (enumerate->parsed()) return cmd_enumerate(order, where, up_to_iso);
    if (selftest->parsed()) return iquo::tools::selftest(std::cout) ? kExitTrue : kExitFalse;
  } catch (const iquo::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
