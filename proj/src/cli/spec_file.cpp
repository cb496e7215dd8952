#include "gpt/cli/spec_file.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <regex>
#include <sstream>

namespace gpt::cli {

ParseError::ParseError(int line, std::string field, const std::string& what)
    : Error("line " + std::to_string(line) + (field.empty() ? "" : " (" + field + ")") + ": " + what),
      line_(line),
      field_(std::move(field)) {}

namespace {

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : "; ") + s;
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> violations)
    : Error("invalid theory: " + join(violations)), violations_(std::move(violations)) {}

const Node* Node::find(const std::string& k) const {
  for (const auto& c : children)
    if (c.key == k) return &c;
  return nullptr;
}

std::vector<const Node*> Node::all(const std::string& k) const {
  std::vector<const Node*> out;
  for (const auto& c : children)
    if (c.key == k) out.push_back(&c);
  return out;
}

Node parse_tree(std::istream& in) {
  Node root;
  // (indent, node) pairs; root sits at indent -1.
  std::vector<std::pair<int, Node*>> stack{{-1, &root}};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
    if (trim(line).empty()) continue;
    const auto first = line.find_first_not_of(' ');
    if (line[first] == '\t') throw ParseError(lineno, "", "tabs are not allowed in indentation");
    const int indent = static_cast<int>(first);
    const std::string body = trim(line);

    while (stack.back().first >= indent) stack.pop_back();
    Node* parent = stack.back().second;

    Node node;
    node.line = lineno;
    const auto colon = body.find(':');
    if (colon == std::string::npos) {
      node.value = body;
    } else {
      node.key = trim(body.substr(0, colon));
      node.value = trim(body.substr(colon + 1));
      if (node.key.empty()) throw ParseError(lineno, "", "empty key");
    }
    parent->children.push_back(std::move(node));
    stack.emplace_back(indent, &parent->children.back());
  }
  return root;
}

Node parse_tree(const std::string& text) {
  std::istringstream in(text);
  return parse_tree(in);
}

Complex parse_complex(const std::string& s) {
  static const std::string num = R"(([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?))";
  static const std::regex full("^" + num + R"(([+-](?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)j$)");
  static const std::regex real_only("^" + num + "$");
  static const std::regex imag_only("^" + num + "j$");
  std::smatch m;
  if (std::regex_match(s, m, full)) return {std::stod(m[1]), std::stod(m[2])};
  if (std::regex_match(s, m, real_only)) return {std::stod(m[1]), 0.0};
  if (std::regex_match(s, m, imag_only)) return {0.0, std::stod(m[1])};
  throw std::invalid_argument("not a complex number: '" + s + "'");
}

namespace {

long parse_integer(const Node& n) {
  long v = 0;
  const auto* end = n.value.data() + n.value.size();
  const auto r = std::from_chars(n.value.data(), end, v);
  if (r.ec != std::errc() || r.ptr != end) throw ParseError(n.line, n.key, "expected an integer, got '" + n.value + "'");
  return v;
}

std::uint64_t parse_unsigned(const Node& n) {
  std::uint64_t v = 0;
  const auto* end = n.value.data() + n.value.size();
  const auto r = std::from_chars(n.value.data(), end, v);
  if (r.ec != std::errc() || r.ptr != end)
    throw ParseError(n.line, n.key, "expected an unsigned 64-bit integer, got '" + n.value + "'");
  return v;
}

double parse_real(const Node& n) {
  try {
    std::size_t used = 0;
    const double v = std::stod(n.value, &used);
    if (used != n.value.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ParseError(n.line, n.key, "expected a number, got '" + n.value + "'");
  }
}

CMatrix parse_matrix(const Node& block) {
  std::vector<std::vector<Complex>> rows;
  for (const auto& row : block.children) {
    if (!row.key.empty()) throw ParseError(row.line, block.key, "matrix rows must not contain ':'");
    std::istringstream ss(row.value);
    std::vector<Complex> entries;
    std::string tok;
    while (ss >> tok) {
      try {
        entries.push_back(parse_complex(tok));
      } catch (const std::invalid_argument& e) {
        throw ParseError(row.line, block.key, e.what());
      }
    }
    if (!rows.empty() && entries.size() != rows.front().size())
      throw ParseError(row.line, block.key, "row has " + std::to_string(entries.size()) + " entries, expected " +
                                                std::to_string(rows.front().size()));
    rows.push_back(std::move(entries));
  }
  if (rows.empty()) throw ParseError(block.line, block.key, "empty matrix");
  CMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  return m;
}

std::vector<std::string> check_state(const CMatrix& m, int d) {
  std::vector<std::string> v;
  const int n = d * d;
  if (m.rows() != n || m.cols() != n) {
    v.push_back("faithful_state must be " + std::to_string(n) + "x" + std::to_string(n) + ", got " +
                std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    return v;
  }
  if (!is_hermitian(m, 1e-12)) v.push_back("faithful_state is not Hermitian");
  const RVector ev = eigenvalues_hermitian(hermitian_part(m));
  if (ev.minCoeff() < -1e-12) {
    std::ostringstream os;
    os.precision(17);
    os << "faithful_state is not positive semidefinite (eigenvalue " << ev.minCoeff() << ")";
    v.push_back(os.str());
  }
  if (std::abs(m.trace() - Complex(1.0)) > 1e-12) v.push_back("faithful_state trace is not 1");
  return v;
}

}  // namespace

Theory TheorySpec::theory() const { return backend == Backend::quantum ? Theory::quantum(d) : Theory::classical(d); }

TheorySpec parse_theory(const std::string& text) {
  const Node root = parse_tree(text);
  TheorySpec spec;
  bool have_d2 = false;
  std::vector<std::string> violations;

  for (const auto& n : root.children) {
    if (n.key.empty()) throw ParseError(n.line, "", "unexpected bare value '" + n.value + "'");
    if (n.key == "backend") {
      if (n.value == "quantum")
        spec.backend = Backend::quantum;
      else if (n.value == "classical")
        spec.backend = Backend::classical;
      else
        throw ParseError(n.line, n.key, "expected quantum or classical, got '" + n.value + "'");
    } else if (n.key == "d") {
      spec.d = static_cast<int>(parse_integer(n));
    } else if (n.key == "d2") {
      spec.d2 = static_cast<int>(parse_integer(n));
      have_d2 = true;
    } else if (n.key == "seed") {
      spec.seed = parse_unsigned(n);
    } else if (n.key == "tol") {
      spec.tol.probability = parse_real(n);
    } else if (n.key == "tolerance") {
      for (const auto& t : n.children) {
        if (t.key == "probability")
          spec.tol.probability = parse_real(t);
        else if (t.key == "algebra")
          spec.tol.algebra = parse_real(t);
        else if (t.key == "residual")
          spec.tol.residual = parse_real(t);
        else
          throw ParseError(t.line, t.key, "unknown tolerance");
      }
    } else if (n.key == "faithful_state") {
      spec.faithful_state = parse_matrix(n);
    } else {
      throw ParseError(n.line, n.key, "unknown field");
    }
  }
  if (!root.find("backend")) throw ParseError(0, "backend", "missing required field");
  if (!root.find("d")) throw ParseError(0, "d", "missing required field");
  if (!have_d2) spec.d2 = spec.d;

  if (spec.d < 2) violations.push_back("d must be >= 2, got " + std::to_string(spec.d));
  if (spec.d2 < 2) violations.push_back("d2 must be >= 2, got " + std::to_string(spec.d2));
  for (double t : {spec.tol.probability, spec.tol.algebra, spec.tol.residual})
    if (!(t > 0.0)) violations.push_back("tolerances must be positive");
  if (spec.faithful_state) {
    if (spec.backend != Backend::quantum) violations.push_back("faithful_state requires the quantum backend");
    if (spec.d >= 2)
      for (auto& v : check_state(*spec.faithful_state, spec.d)) violations.push_back(std::move(v));
  }
  if (!violations.empty()) throw ValidationError(violations);
  return spec;
}

TheorySpec load_theory(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "", "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_theory(ss.str());
}

}  // namespace gpt::cli
