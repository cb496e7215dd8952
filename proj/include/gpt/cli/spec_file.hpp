#pragma once

// Plain-text key/value tree used for theory files and structured reports.
//
//   # comment
//   backend: quantum
//   d: 2
//   tolerance:
//     probability: 1e-9
//   faithful_state:
//     0.5+0j 0 0 0.5
//     ...
//
// Nesting is by indentation (spaces only). A line without a colon is a bare
// item of its parent block; matrix rows are written that way, complex
// entries as re+imj.

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "gpt/errors.hpp"
#include "gpt/linalg.hpp"
#include "gpt/theory.hpp"

namespace gpt::cli {

class ParseError : public Error {
 public:
  ParseError(int line, std::string field, const std::string& what);
  int line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  int line_;
  std::string field_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

struct Node {
  std::string key;  // empty for bare items
  std::string value;
  int line = 0;
  std::vector<Node> children;

  /// First child with this key, or nullptr.
  const Node* find(const std::string& k) const;
  std::vector<const Node*> all(const std::string& k) const;
};

/// The root node has an empty key and holds the top-level entries.
Node parse_tree(std::istream& in);
Node parse_tree(const std::string& text);

/// Parses "1.5", "-2e-3", "0.5+0.5j", "-1j".
Complex parse_complex(const std::string& s);

struct Tolerances {
  double probability = 1e-9;  // probabilities, norms, Born rule
  double algebra = 1e-12;     // exact identities: composition, transposition axioms
  double residual = 1e-10;    // certified linear solves
};

struct TheorySpec {
  Backend backend = Backend::quantum;
  int d = 2;
  /// Dimension of the second factor in the composite-system rows.
  int d2 = 2;
  std::optional<CMatrix> faithful_state;
  std::uint64_t seed = 0;
  Tolerances tol;

  Theory theory() const;
};

TheorySpec parse_theory(const std::string& text);
/// Throws ParseError (with line and field) or ValidationError.
TheorySpec load_theory(const std::string& path);

}  // namespace gpt::cli
