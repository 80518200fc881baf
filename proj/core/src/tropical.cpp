#include "tropval/tropical.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tropval/error.hpp"

namespace tropval {

// ExponentVector ----------------------------------------------------------

int ExponentVector::degree() const noexcept {
  return std::accumulate(exps_.begin(), exps_.end(), 0);
}

bool ExponentVector::is_one() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

bool ExponentVector::divides(const ExponentVector& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

ExponentVector ExponentVector::operator+(const ExponentVector& other) const {
  ExponentVector out(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += other.exps_[i];
  return out;
}

ExponentVector ExponentVector::operator-(const ExponentVector& other) const {
  ExponentVector out(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] -= other.exps_[i];
  return out;
}

ExponentVector ExponentVector::lcm(const ExponentVector& other) const {
  ExponentVector out(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i)
    out.exps_[i] = std::max(exps_[i], other.exps_[i]);
  return out;
}

bool ExponentVector::coprime(const ExponentVector& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

ExponentVector ExponentVector::extended(std::size_t extra) const {
  std::vector<int> e = exps_;
  e.resize(e.size() + extra, 0);
  return ExponentVector(std::move(e));
}

// WeightVector ------------------------------------------------------------

bool WeightVector::is_zero() const {
  return std::all_of(w_.begin(), w_.end(), [](const Rational& r) { return r == 0; });
}

bool WeightVector::is_nonnegative() const {
  return std::all_of(w_.begin(), w_.end(), [](const Rational& r) { return r >= 0; });
}

Rational WeightVector::dot(const ExponentVector& e) const {
  if (e.size() != w_.size())
    throw Error(ErrorKind::DimensionMismatch,
                "weight of length " + std::to_string(w_.size()) +
                    " applied to exponent vector of length " + std::to_string(e.size()));
  Rational s(0);
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (e[i] != 0) s += w_[i] * e[i];
  return s;
}

WeightVector WeightVector::operator+(const WeightVector& other) const {
  if (other.size() != size())
    throw Error(ErrorKind::DimensionMismatch, "adding weight vectors of different length");
  WeightVector out(*this);
  for (std::size_t i = 0; i < w_.size(); ++i) out.w_[i] += other.w_[i];
  return out;
}

WeightVector WeightVector::operator*(const Rational& r) const {
  WeightVector out(*this);
  for (auto& x : out.w_) x *= r;
  return out;
}

std::string WeightVector::to_string() const { return tropval::to_string(w_); }

WeightVector WeightVector::parse(std::string_view text) {
  return WeightVector(parse_rational_list(text));
}

// TropicalValue -------------------------------------------------------------

bool operator==(const TropicalValue& a, const TropicalValue& b) {
  if (a.is_bottom() || b.is_bottom()) return a.is_bottom() && b.is_bottom();
  return a.value() == b.value();
}

bool operator<(const TropicalValue& a, const TropicalValue& b) {
  if (b.is_bottom()) return false;
  if (a.is_bottom()) return true;
  return a.value() < b.value();
}

std::string TropicalValue::to_string() const {
  return is_bottom() ? std::string("-inf") : tropval::to_string(*value_);
}

TropicalValue TropicalValue::parse(std::string_view text) {
  if (text == "-inf") return bottom();
  return TropicalValue(parse_rational(text));
}

TropicalValue trop_add(const TropicalValue& a, const TropicalValue& b) {
  return a < b ? b : a;
}

TropicalValue trop_mul(const TropicalValue& a, const TropicalValue& b) {
  if (a.is_bottom() || b.is_bottom()) return TropicalValue::bottom();
  return TropicalValue(Rational(a.value() + b.value()));
}

TropicalValue monomial_weight(const WeightVector& w, const ExponentVector& e,
                              const TropicalValue& coeff_val) {
  Rational d = w.dot(e);
  return trop_mul(coeff_val, TropicalValue(d));
}

}  // namespace tropval
