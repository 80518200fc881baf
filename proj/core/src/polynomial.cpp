#include "tropval/polynomial.hpp"

#include <algorithm>
#include <set>

#include "tropval/error.hpp"

namespace tropval {

RingContext::RingContext(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string> seen;
  for (const auto& n : names_)
    if (!seen.insert(n).second)
      throw Error(ErrorKind::DuplicateVariable, "duplicate variable '" + n + "'");
}

std::optional<std::size_t> RingContext::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

Ring RingContext::with_fresh_variable(const std::string& stem) const {
  std::string fresh = stem;
  while (index_of(fresh)) fresh += "_";
  std::vector<std::string> names = names_;
  names.push_back(fresh);
  return std::make_shared<const RingContext>(std::move(names));
}

std::string RingContext::to_string() const {
  std::string out = "ring";
  for (const auto& n : names_) out += " " + n;
  return out + ";";
}

Ring make_ring(std::vector<std::string> names) {
  return std::make_shared<const RingContext>(std::move(names));
}

bool same_ring(const Ring& a, const Ring& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

// Polynomial ----------------------------------------------------------------

Polynomial::Polynomial(Ring ring, TermMap terms) : ring_(std::move(ring)) {
  for (auto& [e, c] : terms) {
    if (e.size() != ring_->size())
      throw Error(ErrorKind::DimensionMismatch, "exponent vector does not match ring");
    if (c != 0) terms_.emplace(e, c);
  }
}

Polynomial Polynomial::constant(Ring ring, const Rational& c) {
  Polynomial p(std::move(ring));
  p.add_term(ExponentVector(p.ring_->size()), c);
  return p;
}

Polynomial Polynomial::variable(Ring ring, std::size_t index) {
  ExponentVector e(ring->size());
  e[index] = 1;
  return monomial(std::move(ring), e);
}

Polynomial Polynomial::monomial(Ring ring, const ExponentVector& e, const Rational& c) {
  Polynomial p(std::move(ring));
  p.add_term(e, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.degree());
  return d;
}

Rational Polynomial::coefficient(const ExponentVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const ExponentVector& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::require_same_ring(const Polynomial& other) const {
  if (!same_ring(ring_, other.ring_))
    throw Error(ErrorKind::RingMismatch, "polynomials live in different rings");
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_ring(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_ring(other);
  for (const auto& [e, c] : other.terms_) add_term(e, Rational(-c));
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same_ring(b);
  Polynomial out(a.ring_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, Rational(ca * cb));
  return out;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  if (c == 0) return Polynomial(ring_);
  Polynomial out(*this);
  for (auto& [e, coeff] : out.terms_) coeff *= c;
  return out;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(ring_, Rational(1));
  Polynomial base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

Polynomial Polynomial::times_monomial(const ExponentVector& e, const Rational& c) const {
  Polynomial out(ring_);
  if (c == 0) return out;
  for (const auto& [te, tc] : terms_) out.terms_.emplace_hint(out.terms_.end(), te + e, tc * c);
  return out;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images, const Ring& target) const {
  if (images.size() != ring_->size())
    throw Error(ErrorKind::DimensionMismatch, "substitution needs one image per variable");
  for (const auto& img : images)
    if (!same_ring(img.ring(), target))
      throw Error(ErrorKind::RingMismatch, "substitution images live in different rings");
  // Cache powers per variable.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t i, int k) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(target, Rational(1)));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[i]);
    return cache[static_cast<std::size_t>(k)];
  };
  Polynomial out(target);
  for (const auto& [e, c] : terms_) {
    Polynomial term = constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) term = term * power(i, e[i]);
    out += term;
  }
  return out;
}

Polynomial Polynomial::embed(const Ring& bigger) const {
  if (bigger->size() < ring_->size())
    throw Error(ErrorKind::RingMismatch, "cannot embed into a smaller ring");
  for (std::size_t i = 0; i < ring_->size(); ++i)
    if (bigger->name(i) != ring_->name(i))
      throw Error(ErrorKind::RingMismatch, "embedding ring does not extend the source ring");
  Polynomial out(bigger);
  std::size_t extra = bigger->size() - ring_->size();
  for (const auto& [e, c] : terms_) out.terms_.emplace(e.extended(extra), c);
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_ != b.terms_) return false;
  if (a.terms_.empty()) return true;
  return same_ring(a.ring_, b.ring_);
}

std::string monomial_to_string(const RingContext& ring, const ExponentVector& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.name(i);
    if (e[i] > 1) out += '^' + std::to_string(e[i]);
  }
  return out.empty() ? std::string("1") : out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const TermMap::value_type*> order;
  order.reserve(terms_.size());
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](auto* a, auto* b) {
    int da = a->first.degree(), db = b->first.degree();
    if (da != db) return da > db;
    return a->first > b->first;
  });
  std::string out;
  bool first = true;
  for (const auto* t : order) {
    const auto& [e, c] = *t;
    bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (e.is_one()) {
      out += tropval::to_string(mag);
    } else {
      if (mag != 1) out += tropval::to_string(mag) + "*";
      out += monomial_to_string(*ring_, e);
    }
  }
  return out;
}

}  // namespace tropval
