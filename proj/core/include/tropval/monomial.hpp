#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "tropval/rational.hpp"

namespace tropval {

/// Exponents of a monomial x_1^{a_1} ... x_n^{a_n}; length is fixed by the ring.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t n) : exps_(n, 0) {}
  ExponentVector(std::initializer_list<int> exps) : exps_(exps) {}
  explicit ExponentVector(std::vector<int> exps) : exps_(std::move(exps)) {}

  std::size_t size() const noexcept { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  int& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<int>& values() const noexcept { return exps_; }

  int degree() const noexcept;
  bool is_one() const noexcept;

  /// this | other
  bool divides(const ExponentVector& other) const;
  ExponentVector operator+(const ExponentVector& other) const;
  /// Requires divides(); exponents stay non-negative.
  ExponentVector operator-(const ExponentVector& other) const;
  ExponentVector lcm(const ExponentVector& other) const;
  bool coprime(const ExponentVector& other) const;

  /// Appends `extra` trailing zero exponents.
  ExponentVector extended(std::size_t extra) const;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector& a, const ExponentVector& b) {
    return a.exps_ <=> b.exps_;
  }

 private:
  std::vector<int> exps_;
};

/// Rational weights on the ring variables.
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::size_t n) : w_(n, Rational(0)) {}
  explicit WeightVector(std::vector<Rational> w) : w_(std::move(w)) {}
  WeightVector(std::initializer_list<Rational> w) : w_(w) {}

  std::size_t size() const noexcept { return w_.size(); }
  const Rational& operator[](std::size_t i) const { return w_[i]; }
  Rational& operator[](std::size_t i) { return w_[i]; }
  const std::vector<Rational>& values() const noexcept { return w_; }

  bool is_zero() const;
  bool is_nonnegative() const;

  /// Dot product with an exponent vector. Throws DimensionMismatch.
  Rational dot(const ExponentVector& e) const;

  WeightVector operator+(const WeightVector& other) const;
  WeightVector operator*(const Rational& r) const;

  friend bool operator==(const WeightVector& a, const WeightVector& b) { return a.w_ == b.w_; }
  /// Lexicographic; used only for deterministic sorting.
  friend bool operator<(const WeightVector& a, const WeightVector& b) { return a.w_ < b.w_; }

  std::string to_string() const;
  static WeightVector parse(std::string_view text);

 private:
  std::vector<Rational> w_;
};

}  // namespace tropval
