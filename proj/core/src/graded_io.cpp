#include "tropval/graded_io.hpp"

#include <cctype>
#include <sstream>

#include "tropval/error.hpp"

namespace tropval {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

struct Statement {
  std::string text;
  int line;
  int column;
};

// Splits on ';' with comments removed, remembering where each statement starts.
std::vector<Statement> statements(std::string_view src) {
  std::vector<Statement> out;
  std::string cur;
  int line = 1, col = 1, start_line = 1, start_col = 1;
  bool in_comment = false, started = false;
  for (char c : src) {
    if (in_comment) {
      if (c == '\n') in_comment = false;
    } else if (c == '#') {
      in_comment = true;
    } else if (c == ';') {
      out.push_back({cur, start_line, start_col});
      cur.clear();
      started = false;
    } else {
      if (!started && !std::isspace(static_cast<unsigned char>(c))) {
        started = true;
        start_line = line;
        start_col = col;
      }
      if (started) cur += c;
    }
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  if (!trim(cur).empty())
    throw ParseError(ErrorKind::Syntax, "missing ';' at end of statement", start_line, start_col);
  return out;
}

class Cursor {
 public:
  explicit Cursor(const Statement& st) : st_(st), s_(st.text) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  std::string word() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected a word");
    return std::string(s_.substr(start, pos_ - start));
  }
  void keyword(std::string_view k) {
    if (word() != k) fail("expected '" + std::string(k) + "'");
  }
  long integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string t(s_.substr(start, pos_ - start));
    if (t.empty() || t == "-" || t == "+") fail("expected an integer");
    if (t.size() > 9) fail("integer too large");
    return std::stol(t);
  }
  Rational rational() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/' ||
                                s_[pos_] == '-' || s_[pos_] == '+'))
      ++pos_;
    try {
      return parse_rational(s_.substr(start, pos_ - start));
    } catch (const Error&) {
      pos_ = start;
      fail("expected a rational number");
    }
  }
  std::vector<int> tuple() {
    expect('(');
    std::vector<int> out;
    while (true) {
      long v = integer();
      out.push_back(static_cast<int>(v));
      if (peek(',')) {
        ++pos_;
        continue;
      }
      break;
    }
    expect(')');
    return out;
  }
  std::vector<int> bare_list() {
    std::vector<int> out{static_cast<int>(integer())};
    while (peek(',')) {
      ++pos_;
      out.push_back(static_cast<int>(integer()));
    }
    return out;
  }
  std::string rest() {
    skip_ws();
    std::string out(trim(s_.substr(pos_)));
    pos_ = s_.size();
    return out;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    // Column within the statement; statements rarely span lines.
    int line = st_.line, col = st_.column;
    for (std::size_t i = 0; i < pos_ && i < s_.size(); ++i) {
      if (s_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(ErrorKind::Syntax, msg, line, col);
  }

 private:
  const Statement& st_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

BasisKey to_key(Cursor& cur, const std::vector<int>& t, std::size_t dim) {
  if (t.size() != dim + 1) cur.fail("basis tuple needs " + std::to_string(dim) + " grade entries and an index");
  return BasisKey{Grade(t.begin(), t.end() - 1), t.back()};
}

}  // namespace

GradedAlgebraSpec parse_graded_spec(std::string_view text) {
  GradedAlgebraSpec spec;
  bool have_dim = false, have_trunc = false;
  for (const auto& st : statements(text)) {
    Cursor cur(st);
    if (cur.done()) continue;
    std::string kw = cur.word();
    if (kw != "monoid" && !have_dim) cur.fail("the first statement must be 'monoid dim k'");
    if (kw == "monoid") {
      if (have_dim) cur.fail("monoid declared twice");
      cur.keyword("dim");
      long k = cur.integer();
      if (k < 1) cur.fail("monoid dimension must be positive");
      spec.monoid_dim = static_cast<std::size_t>(k);
      have_dim = true;
    } else if (kw == "truncation") {
      spec.truncation_bound = cur.rational();
      cur.keyword("weights");
      spec.truncation_weights.clear();
      for (std::size_t i = 0; i < spec.monoid_dim; ++i) spec.truncation_weights.push_back(cur.rational());
      have_trunc = true;
    } else if (kw == "component") {
      std::vector<int> g = cur.bare_list();
      if (g.size() != spec.monoid_dim) cur.fail("grade has the wrong length");
      cur.keyword("size");
      long m = cur.integer();
      if (m < 1) cur.fail("component size must be positive");
      spec.components.push_back({g, static_cast<int>(m)});
    } else if (kw == "label") {
      BasisKey k = to_key(cur, cur.tuple(), spec.monoid_dim);
      std::string name = cur.rest();
      if (name.empty()) cur.fail("empty label");
      spec.labels[k] = name;
    } else if (kw == "mult") {
      GradedAlgebraSpec::Product p;
      p.left = to_key(cur, cur.tuple(), spec.monoid_dim);
      cur.expect('*');
      p.right = to_key(cur, cur.tuple(), spec.monoid_dim);
      cur.expect('=');
      if (cur.peek('0')) {
        cur.integer();
      } else {
        bool first = true;
        while (!cur.done()) {
          Rational sign = 1;
          if (cur.peek('+') || cur.peek('-')) {
            if (cur.peek('-')) sign = -1;
            cur.expect(cur.peek('+') ? '+' : '-');
          } else if (!first) {
            cur.fail("expected '+' or '-'");
          }
          Rational c = 1;
          if (!cur.peek('(')) {
            c = cur.rational();
            cur.expect('*');
          }
          p.terms.emplace_back(to_key(cur, cur.tuple(), spec.monoid_dim), sign * c);
          first = false;
        }
      }
      spec.products.push_back(std::move(p));
    } else {
      cur.fail("unknown statement '" + kw + "'");
    }
    if (!cur.done()) cur.fail("unexpected text at end of statement");
  }
  if (!have_dim) throw ParseError(ErrorKind::Syntax, "missing 'monoid dim k' statement", 1, 1);
  if (!have_trunc) {
    spec.truncation_weights.assign(spec.monoid_dim, Rational(1));
    Rational top = 0;
    for (const auto& c : spec.components) {
      Rational d = 0;
      for (int x : c.grade) d += x;
      top = std::max(top, d);
    }
    spec.truncation_bound = 2 * top;
  }
  return spec;
}

GradedAlgebra parse_graded_algebra(std::string_view text) {
  return GradedAlgebra::build(parse_graded_spec(text));
}

std::string format_graded_algebra(const GradedAlgebra& A) {
  auto tuple = [](const BasisKey& k) {
    std::string s = "(";
    for (int x : k.grade) s += std::to_string(x) + ",";
    return s + std::to_string(k.index) + ")";
  };
  std::ostringstream out;
  out << "monoid dim " << A.monoid_dim() << ";\n";
  out << "truncation " << to_string(A.truncation_bound()) << " weights "
      << to_string(A.truncation_weights()) << ";\n";
  for (const auto& c : A.components()) {
    out << "component ";
    for (std::size_t i = 0; i < c.grade.size(); ++i) out << (i ? "," : "") << c.grade[i];
    out << " size " << c.size << ";\n";
  }
  for (BasisId id = 0; id < A.basis_size(); ++id) {
    std::string name = A.label(id);
    if (name != tuple(A.key(id)) && name.front() != '(') out << "label " << tuple(A.key(id)) << " " << name << ";\n";
  }
  for (const auto& [k, e] : A.table()) {
    out << "mult " << tuple(A.key(k.first)) << "*" << tuple(A.key(k.second)) << " =";
    bool first = true;
    for (const auto& [id, c] : e) {
      if (!first || c < 0) out << (c < 0 ? " -" : " +");
      out << " " << to_string(Rational(abs(c))) << "*" << tuple(A.key(id));
      first = false;
    }
    out << ";\n";
  }
  return out.str();
}

Element parse_element(const GradedAlgebra& A, std::string_view text) {
  std::map<std::string, BasisId> by_label;
  for (BasisId id = 0; id < A.basis_size(); ++id) by_label.emplace(A.label(id), id);

  auto atom = [&](std::string_view s) -> std::optional<BasisId> {
    s = trim(s);
    if (auto it = by_label.find(std::string(s)); it != by_label.end()) return it->second;
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
      std::vector<int> t;
      std::string inner(s.substr(1, s.size() - 2));
      std::stringstream ss(inner);
      std::string part;
      while (std::getline(ss, part, ',')) {
        auto p = trim(part);
        if (p.empty()) return std::nullopt;
        try {
          t.push_back(std::stoi(std::string(p)));
        } catch (const std::exception&) {
          return std::nullopt;
        }
      }
      if (t.size() != A.monoid_dim() + 1) return std::nullopt;
      return A.find(BasisKey{Grade(t.begin(), t.end() - 1), t.back()});
    }
    return std::nullopt;
  };

  Element out;
  std::size_t pos = 0;
  int depth = 0;
  std::vector<std::pair<Rational, std::string>> terms;
  Rational sign = 1;
  std::string cur;
  auto flush = [&]() {
    if (!trim(cur).empty()) terms.emplace_back(sign, std::string(trim(cur)));
    else if (!terms.empty() || sign != 1)
      throw ParseError(ErrorKind::Syntax, "empty term in element", 1, static_cast<int>(pos) + 1);
    cur.clear();
  };
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && (c == '+' || c == '-')) {
      if (trim(cur).empty() && terms.empty() && sign == 1) {
        sign = c == '-' ? -1 : 1;
        continue;
      }
      flush();
      sign = c == '-' ? -1 : 1;
      continue;
    }
    cur += c;
  }
  flush();
  for (const auto& [s, t] : terms) {
    if (auto id = atom(t)) {
      add_scaled(out, basis_element(*id), s);
      continue;
    }
    auto star = t.find('*');
    if (star != std::string::npos) {
      try {
        Rational c = parse_rational(trim(std::string_view(t).substr(0, star)));
        if (auto id = atom(std::string_view(t).substr(star + 1))) {
          add_scaled(out, basis_element(*id), s * c);
          continue;
        }
      } catch (const Error&) {
      }
    }
    throw Error(ErrorKind::UnknownVariable, "unknown basis element '" + t + "'");
  }
  return out;
}

LexFunctional parse_lex_functional(std::string_view text, std::size_t dim) {
  LexFunctional f;
  std::string s(text);
  std::stringstream rows(s);
  std::string row;
  while (std::getline(rows, row, '|')) {
    std::vector<Rational> r = parse_rational_list(row);
    if (r.size() != dim)
      throw Error(ErrorKind::DimensionMismatch, "functional row has " + std::to_string(r.size()) +
                                                    " entries, monoid has dimension " + std::to_string(dim));
    f.rows.push_back(std::move(r));
  }
  if (f.rows.empty()) throw Error(ErrorKind::Syntax, "empty functional");
  return f;
}

}  // namespace tropval
