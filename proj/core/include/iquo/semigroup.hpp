#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace iquo {

class Error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int col)
      : Error(what + " (line " + std::to_string(line) + ", col " + std::to_string(col) + ")"),
        line(line),
        col(col) {}
  int line;
  int col;
};

class ValidationError : public Error {
  using Error::Error;
};

class NotAnEquivalence : public Error {
  using Error::Error;
};

class NotPrimitiveInverse : public Error {
  using Error::Error;
};

class PreconditionUnverified : public Error {
  using Error::Error;
};

class BadIndex : public Error {
  using Error::Error;
};

class TooLarge : public Error {
  using Error::Error;
};

struct ValidationFailure {
  enum class Kind { Associativity, ZeroLeft, ZeroRight };
  Kind kind;
  std::array<int, 3> witness;  // Associativity: (i,j,k); ZeroLeft/Right: (j,-1,-1)
};

struct ValidationReport {
  bool ok = true;
  std::vector<ValidationFailure> failures;
  bool truncated = false;
  std::string to_text() const;
};

/// Validate a raw table candidate. Throws ValidationError for malformed input
/// (non-square table, out-of-range entries or zero index); associativity and
/// zero-absorption violations are collected into the report, capped at
/// max_witnesses.
ValidationReport validate_table(int n, int zero, const std::vector<int>& table,
                                int max_witnesses = 16);

/// A finite semigroup with a designated absorbing zero, given by its full
/// Cayley table. Canonical form: the zero sits at index 0; constructors
/// re-index as needed. Immutable after construction.
class FiniteSemigroup {
 public:
  /// The one-element semigroup {0}.
  FiniteSemigroup();

  /// Build from a raw table with zero at an arbitrary index; validates and
  /// re-indexes into canonical form. Throws ValidationError if the table is
  /// malformed, non-associative or the zero does not absorb.
  static FiniteSemigroup from_table(int n, int zero, std::vector<int> table,
                                    std::vector<std::string> labels = {});

  /// Wrap an already-canonical, already-valid table without re-checking.
  /// For internal construction paths (builders, enumeration) where validity
  /// is guaranteed by construction.
  static FiniteSemigroup trusted(int n, std::vector<int> table,
                                 std::vector<std::string> labels = {});

  int size() const { return n_; }
  int zero() const { return 0; }
  int product(int a, int b) const { return table_[static_cast<size_t>(a) * n_ + b]; }
  const std::vector<int>& table() const { return table_; }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Label of element a, falling back to its decimal index.
  std::string label(int a) const;

  friend bool operator==(const FiniteSemigroup& x, const FiniteSemigroup& y) = default;

 private:
  FiniteSemigroup(int n, std::vector<int> table, std::vector<std::string> labels);

  int n_;
  std::vector<int> table_;
  std::vector<std::string> labels_;
};

struct SubsemigroupResult {
  FiniteSemigroup sub;
  /// inclusion[i] = index in the parent of the sub's element i.
  std::vector<int> inclusion;
};

/// Closure of seed under the parent's table, re-indexed to canonical form.
/// The parent's zero is part of the result when the closure produces it, when
/// adjoin_zero is set, or when the closure has no absorbing element of its
/// own (the result must be a semigroup with zero).
SubsemigroupResult subsemigroup(const FiniteSemigroup& s, const std::vector<int>& seed,
                                bool adjoin_zero = false);

/// Parse the .sgp text format:
///   line 1: "<n> <zero_index>"
///   lines 2..n+1: n space-separated product indices (row i = products i*0 .. i*(n-1))
///   optional trailing label lines: "# <index> <label>"
/// UTF-8, LF line endings. Throws ParseError or ValidationError.
FiniteSemigroup parse_sgp(std::string_view text);

/// Serialize to the .sgp format; inverse of parse_sgp on canonical inputs.
std::string serialize_sgp(const FiniteSemigroup& s);

}  // namespace iquo
