#include "tropval/rational.hpp"

#include <cctype>
#include <sstream>

#include "tropval/error.hpp"

namespace tropval {

Rational make_rational(long n, long d) {
  if (d == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::DuplicateVariable: return "DuplicateVariable";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NonfiniteGeneratorValue: return "NonfiniteGeneratorValue";
    case ErrorKind::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorKind::HypothesisFails: return "HypothesisFails";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::AssociativityViolation: return "AssociativityViolation";
    case ErrorKind::NonTermination: return "NonTermination";
    case ErrorKind::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorKind::DictionaryMismatch: return "DictionaryMismatch";
    case ErrorKind::NotLowerTriangular: return "NotLowerTriangular";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"}
                                                         : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw Error(ErrorKind::Syntax, "malformed rational '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw Error(ErrorKind::Syntax, "zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) out.push_back(parse_rational(token));
  return out;
}

std::string to_string(const std::vector<Rational>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ' ';
    out += to_string(values[i]);
  }
  return out;
}

}  // namespace tropval
