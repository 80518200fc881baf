#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tropval/monomial.hpp"
#include "tropval/rational.hpp"

namespace tropval {

/// Ordered variable names of a polynomial ring over Q.
class RingContext {
 public:
  /// Throws DuplicateVariable.
  explicit RingContext(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Appends a fresh variable whose name starts with `stem` and collides with nothing.
  std::shared_ptr<const RingContext> with_fresh_variable(const std::string& stem) const;

  friend bool operator==(const RingContext& a, const RingContext& b) {
    return a.names_ == b.names_;
  }

  /// "ring x y z;"
  std::string to_string() const;

 private:
  std::vector<std::string> names_;
};

using Ring = std::shared_ptr<const RingContext>;

Ring make_ring(std::vector<std::string> names);
bool same_ring(const Ring& a, const Ring& b);

/// Sparse polynomial with exact rational coefficients. No zero coefficient is
/// ever stored, so the zero polynomial has an empty term map.
class Polynomial {
 public:
  using TermMap = std::map<ExponentVector, Rational>;

  Polynomial() = default;
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}
  Polynomial(Ring ring, TermMap terms);

  static Polynomial constant(Ring ring, const Rational& c);
  static Polynomial variable(Ring ring, std::size_t index);
  static Polynomial monomial(Ring ring, const ExponentVector& e, const Rational& c = Rational(1));

  const Ring& ring() const noexcept { return ring_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  int total_degree() const;
  Rational coefficient(const ExponentVector& e) const;

  /// Adds c·x^e, dropping the term if it cancels.
  void add_term(const ExponentVector& e, const Rational& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator*(const Rational& c) const;
  Polynomial pow(unsigned k) const;
  Polynomial times_monomial(const ExponentVector& e, const Rational& c) const;

  /// f(images[0], ..., images[n-1]); every image must live in one common ring.
  Polynomial substitute(std::span<const Polynomial> images, const Ring& target) const;
  /// Same polynomial viewed in a ring whose first variables coincide with ours.
  Polynomial embed(const Ring& bigger) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  /// Deterministic total order (ring ignored); for use as a map key.
  friend bool operator<(const Polynomial& a, const Polynomial& b) { return a.terms_ < b.terms_; }

  /// Terms in graded-lex order (highest first), e.g. "x^2*y - 3*y + 1".
  std::string to_string() const;

 private:
  void require_same_ring(const Polynomial& other) const;

  Ring ring_;
  TermMap terms_;
};

/// Prints a monomial like "x^2*y" ("1" for the empty monomial).
std::string monomial_to_string(const RingContext& ring, const ExponentVector& e);

}  // namespace tropval
