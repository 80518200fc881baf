#include "tropval/graded.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "tropval/error.hpp"
#include "tropval/sampling.hpp"

namespace tropval {

void add_scaled(Element& target, const Element& source, const Rational& factor) {
  if (factor == 0) return;
  for (const auto& [id, c] : source) {
    auto [it, fresh] = target.emplace(id, c * factor);
    if (!fresh) {
      it->second += c * factor;
      if (it->second == 0) target.erase(it);
    }
  }
}

Element basis_element(BasisId id) { return Element{{id, Rational(1)}}; }

namespace {

std::string grade_tuple(const Grade& s, std::optional<int> index = std::nullopt) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  if (index) out += "," + std::to_string(*index);
  return out + ")";
}

Grade add_grades(const Grade& a, const Grade& b) {
  Grade out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

std::vector<Rational> add_values(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

const Element kZeroElement{};

}  // namespace

GradedAlgebra GradedAlgebra::build(const GradedAlgebraSpec& spec) {
  GradedAlgebra A;
  A.dim_ = spec.monoid_dim;
  A.weights_ = spec.truncation_weights;
  A.bound_ = spec.truncation_bound;
  if (A.dim_ == 0) throw Error(ErrorKind::InvalidArgument, "monoid dimension must be positive");
  if (A.weights_.size() != A.dim_)
    throw Error(ErrorKind::DimensionMismatch, "truncation weights do not match the monoid dimension");

  auto comps = spec.components;
  for (const auto& c : comps) {
    if (c.grade.size() != A.dim_)
      throw Error(ErrorKind::DimensionMismatch, "component grade " + grade_tuple(c.grade) + " has the wrong length");
    for (int x : c.grade)
      if (x < 0) throw Error(ErrorKind::InvalidArgument, "negative grade " + grade_tuple(c.grade));
    if (c.size < 1) throw Error(ErrorKind::InvalidArgument, "empty component " + grade_tuple(c.grade));
    if (A.degree(c.grade) > A.bound_)
      throw Error(ErrorKind::InvalidArgument, "component " + grade_tuple(c.grade) + " lies above the truncation");
  }
  std::sort(comps.begin(), comps.end(), [&](const auto& a, const auto& b) {
    Rational da = A.degree(a.grade), db = A.degree(b.grade);
    if (da != db) return da < db;
    return a.grade < b.grade;
  });
  for (std::size_t i = 1; i < comps.size(); ++i)
    if (comps[i].grade == comps[i - 1].grade)
      throw Error(ErrorKind::InvalidArgument, "component " + grade_tuple(comps[i].grade) + " listed twice");

  for (const auto& c : comps) {
    A.components_.push_back(Component{c.grade, c.size, A.basis_.size()});
    for (int i = 0; i < c.size; ++i) {
      BasisKey k{c.grade, i};
      A.index_.emplace(k, A.basis_.size());
      A.basis_.push_back(std::move(k));
      A.degree_.push_back(A.degree(c.grade));
    }
  }
  auto lookup = [&](const BasisKey& k) {
    auto id = A.find(k);
    if (!id) throw Error(ErrorKind::IndexOutOfRange, "unknown basis vector " + grade_tuple(k.grade, k.index));
    return *id;
  };
  for (const auto& [k, text] : spec.labels) A.labels_[lookup(k)] = text;

  for (const auto& p : spec.products) {
    BasisId a = lookup(p.left), b = lookup(p.right);
    if (!A.product_defined(a, b))
      throw Error(ErrorKind::InvalidArgument, "product " + A.label(a) + "*" + A.label(b) +
                                                  " lies above the truncation");
    Element e;
    for (const auto& [k, c] : p.terms) add_scaled(e, basis_element(lookup(k)), c);
    if (A.table_.count({a, b}))
      throw Error(ErrorKind::InvalidArgument, "product " + A.label(a) + "*" + A.label(b) + " given twice");
    if (!e.empty()) A.table_.emplace(std::make_pair(a, b), std::move(e));
  }
  A.validate_associativity();
  return A;
}

const BasisKey& GradedAlgebra::key(BasisId id) const {
  if (id >= basis_.size()) throw Error(ErrorKind::IndexOutOfRange, "basis id out of range");
  return basis_[id];
}

std::optional<BasisId> GradedAlgebra::find(const BasisKey& k) const {
  auto it = index_.find(k);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> GradedAlgebra::find_component(const Grade& s) const {
  auto it = index_.find(BasisKey{s, 0});
  if (it == index_.end()) return std::nullopt;
  for (std::size_t c = 0; c < components_.size(); ++c)
    if (components_[c].first == it->second) return c;
  return std::nullopt;
}

Rational GradedAlgebra::degree(const Grade& s) const {
  Rational d = 0;
  for (std::size_t i = 0; i < s.size() && i < weights_.size(); ++i) d += weights_[i] * s[i];
  return d;
}

Rational GradedAlgebra::degree(const Element& e) const {
  Rational d = -1;
  for (const auto& [id, c] : e) d = std::max(d, degree_[id]);
  return d;
}

bool GradedAlgebra::product_defined(BasisId a, BasisId b) const {
  return degree_[a] + degree_[b] <= bound_;
}

bool GradedAlgebra::product_defined(const Element& a, const Element& b) const {
  if (a.empty() || b.empty()) return true;
  return degree(a) + degree(b) <= bound_;
}

const Element& GradedAlgebra::product(BasisId a, BasisId b) const {
  if (!product_defined(a, b))
    throw Error(ErrorKind::IndexOutOfRange, "product " + label(a) + "*" + label(b) + " leaves the truncation");
  auto it = table_.find({a, b});
  return it == table_.end() ? kZeroElement : it->second;
}

Element GradedAlgebra::multiply(const Element& a, const Element& b) const {
  Element out;
  for (const auto& [i, ci] : a)
    for (const auto& [j, cj] : b) add_scaled(out, product(i, j), ci * cj);
  return out;
}

void GradedAlgebra::validate_associativity() const {
  const std::size_t n = basis_.size();
  auto defined_with = [&](const Element& e, BasisId k, bool left) {
    for (const auto& [id, c] : e)
      if (!(left ? product_defined(id, k) : product_defined(k, id))) return false;
    return true;
  };
  for (BasisId i = 0; i < n; ++i)
    for (BasisId j = 0; j < n && product_defined(i, j); ++j) {
      const Element& ij = product(i, j);
      for (BasisId k = 0; k < n && product_defined(j, k); ++k) {
        const Element& jk = product(j, k);
        if (!defined_with(ij, k, true) || !defined_with(jk, i, false)) continue;
        Element left, right;
        for (const auto& [m, c] : ij) add_scaled(left, product(m, k), c);
        for (const auto& [m, c] : jk) add_scaled(right, product(i, m), c);
        if (left != right)
          throw Error(ErrorKind::AssociativityViolation,
                      "(a*b)*c != a*(b*c) for a = " + label(i) + ", b = " + label(j) +
                          ", c = " + label(k) + ": " + to_string(left) + " vs " + to_string(right));
      }
    }
}

GradedAlgebra GradedAlgebra::with_table(const std::map<std::pair<BasisId, BasisId>, Element>& table) const {
  GradedAlgebra A = *this;
  A.table_.clear();
  for (const auto& [k, e] : table) {
    if (k.first >= basis_.size() || k.second >= basis_.size())
      throw Error(ErrorKind::IndexOutOfRange, "table entry for an unknown basis vector");
    if (!product_defined(k.first, k.second))
      throw Error(ErrorKind::InvalidArgument, "table entry above the truncation");
    if (!e.empty()) A.table_.emplace(k, e);
  }
  A.validate_associativity();
  return A;
}

std::string GradedAlgebra::label(BasisId id) const {
  auto it = labels_.find(id);
  if (it != labels_.end()) return it->second;
  const BasisKey& k = key(id);
  return grade_tuple(k.grade, k.index);
}

std::string GradedAlgebra::to_string(const Element& e) const {
  if (e.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = e.rbegin(); it != e.rend(); ++it) {
    const auto& [id, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += tropval::to_string(mag) + "*";
    out += label(id);
    first = false;
  }
  return out;
}

GradedAlgebraSpec GradedAlgebra::to_spec() const {
  GradedAlgebraSpec spec;
  spec.monoid_dim = dim_;
  spec.truncation_weights = weights_;
  spec.truncation_bound = bound_;
  for (const auto& c : components_) spec.components.push_back({c.grade, c.size});
  for (const auto& [k, e] : table_) {
    GradedAlgebraSpec::Product p{basis_[k.first], basis_[k.second], {}};
    for (const auto& [id, c] : e) p.terms.emplace_back(basis_[id], c);
    spec.products.push_back(std::move(p));
  }
  for (const auto& [id, text] : labels_) spec.labels[basis_[id]] = text;
  return spec;
}

LexFunctional LexFunctional::single(std::vector<Rational> row) {
  return LexFunctional{{std::move(row)}};
}

std::vector<Rational> LexFunctional::value(const Grade& s) const {
  std::vector<Rational> out;
  for (const auto& row : rows) {
    if (row.size() != s.size())
      throw Error(ErrorKind::DimensionMismatch, "functional row has " + std::to_string(row.size()) +
                                                    " entries, grade has " + std::to_string(s.size()));
    Rational x = 0;
    for (std::size_t i = 0; i < s.size(); ++i) x += row[i] * s[i];
    out.push_back(x);
  }
  return out;
}

Rational LexFunctional::primary(const Grade& s) const {
  if (rows.empty()) return 0;
  return LexFunctional{{rows.front()}}.value(s).front();
}

std::string LexFunctional::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) out += " | ";
    out += tropval::to_string(rows[r]);
  }
  return out;
}

std::optional<std::vector<Rational>> lex_value(const GradedAlgebra& A, const LexFunctional& h,
                                               const Element& e) {
  std::optional<std::vector<Rational>> best;
  for (const auto& [id, c] : e) {
    auto v = h.value(A.grade(id));
    if (!best || *best < v) best = std::move(v);
  }
  return best;
}

namespace {

Element normalized(const Element& e) {
  Element out;
  add_scaled(out, e, Rational(1 / e.begin()->second));
  return out;
}

std::set<Grade> support_grades(const GradedAlgebra& A, const Element& e) {
  std::set<Grade> out;
  for (const auto& [id, c] : e) out.insert(A.grade(id));
  return out;
}

TropicalValue functional_value(const GradedAlgebra& A, const LexFunctional& f, const Element& e) {
  TropicalValue best;
  for (const auto& [id, c] : e) best = trop_add(best, TropicalValue(f.primary(A.grade(id))));
  return best;
}

}  // namespace

GradedValuation GradedValuation::with_override(const GradedAlgebra& A, const Element& e,
                                               const TropicalValue& value) const {
  if (e.empty()) throw Error(ErrorKind::InvalidArgument, "cannot override the value of 0");
  if (support_grades(A, e).size() < 2)
    throw Error(ErrorKind::InvalidArgument, "override on homogeneous element " + A.to_string(e));
  TropicalValue cap = functional_value(A, functional_, e);
  if (value > cap)
    throw Error(ErrorKind::InvalidArgument, "override " + value.to_string() + " on " + A.to_string(e) +
                                                " exceeds the max " + cap.to_string() + " of its components");
  GradedValuation out = *this;
  out.overrides_[normalized(e)] = value;
  return out;
}

TropicalValue GradedValuation::value(const GradedAlgebra& A, const Element& e) const {
  if (e.empty()) return TropicalValue::bottom();
  if (!overrides_.empty()) {
    auto it = overrides_.find(normalized(e));
    if (it != overrides_.end()) return it->second;
  }
  return functional_value(A, functional_, e);
}

TropicalValue graded_value(const GradedAlgebra& A, const GradedValuation& gv, const Element& e) {
  return gv.value(A, e);
}

namespace {

Element random_element(SampleRng& rng, const std::vector<BasisId>& ids) {
  Element e;
  long terms = rng.between(1, 3);
  for (long t = 0; t < terms; ++t)
    add_scaled(e, basis_element(ids[rng.below(ids.size())]), Rational(rng.nonzero(3)));
  return e;
}

// Pairs (a, b) of nonzero elements of single components, with a*b defined.
std::vector<std::pair<Element, Element>> homogeneous_pairs(const GradedAlgebra& A, std::uint64_t seed,
                                                           std::size_t n_pairs) {
  std::vector<std::pair<Element, Element>> out;
  std::vector<std::size_t> wide;
  for (std::size_t c = 0; c < A.components().size(); ++c)
    if (A.components()[c].size > 1 && 2 * A.degree(A.components()[c].grade) <= A.truncation_bound())
      wide.push_back(c);
  if (wide.empty()) return out;
  SampleRng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  auto draw = [&](std::size_t c) {
    const auto& comp = A.components()[c];
    std::vector<BasisId> ids(static_cast<std::size_t>(comp.size));
    std::iota(ids.begin(), ids.end(), comp.first);
    return random_element(rng, ids);
  };
  std::size_t attempts = 0;
  while (out.size() < n_pairs && attempts++ < 20 * n_pairs) {
    Element a = draw(wide[rng.below(wide.size())]);
    Element b = draw(wide[rng.below(wide.size())]);
    if (a.empty() || b.empty() || !A.product_defined(a, b)) continue;
    out.emplace_back(std::move(a), std::move(b));
  }
  return out;
}

}  // namespace

std::vector<std::pair<Element, Element>> sample_element_pairs(const GradedAlgebra& A,
                                                              std::uint64_t seed,
                                                              std::size_t n_pairs) {
  std::vector<std::pair<Element, Element>> out;
  Rational low = 0;
  for (BasisId id = 0; id < A.basis_size(); ++id)
    if (A.degree(id) > 0) {
      low = A.degree(id);
      break;
    }
  std::vector<Element> base, pool;
  for (BasisId id = 0; id < A.basis_size() && A.degree(id) <= low; ++id) base.push_back(basis_element(id));
  pool = base;
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = i + 1; j < base.size(); ++j) {
      Element plus = base[i], minus = base[i];
      add_scaled(plus, base[j], Rational(1));
      add_scaled(minus, base[j], Rational(-1));
      pool.push_back(std::move(plus));
      pool.push_back(std::move(minus));
    }
  const std::size_t quota = n_pairs / 2;
  for (std::size_t i = 0; i < pool.size() && out.size() < quota; ++i)
    for (std::size_t j = i; j < pool.size() && out.size() < quota; ++j)
      if (A.product_defined(pool[i], pool[j])) out.emplace_back(pool[i], pool[j]);

  std::vector<BasisId> small;
  for (BasisId id = 0; id < A.basis_size(); ++id)
    if (2 * A.degree(id) <= A.truncation_bound()) small.push_back(id);
  if (small.empty()) return out;
  SampleRng rng(seed);
  std::size_t attempts = 0;
  while (out.size() < n_pairs && attempts++ < 20 * n_pairs + 100) {
    Element a = random_element(rng, small);
    Element b = random_element(rng, small);
    if (a.empty() || b.empty() || !A.product_defined(a, b)) continue;
    out.emplace_back(std::move(a), std::move(b));
  }
  return out;
}

namespace {

GradedAxiomReport run_axioms(const GradedAlgebra& A, const GradedValuation& gv, std::uint64_t seed,
                             std::size_t n_samples, bool full) {
  GradedAxiomReport report;
  report.full_check = full;
  report.zero_axiom_holds = gv.value(A, Element{}).is_bottom();

  auto check_product = [&](const Element& a, const Element& b, bool homogeneous) {
    TropicalValue got = gv.value(A, A.multiply(a, b));
    TropicalValue want = trop_mul(gv.value(A, a), gv.value(A, b));
    if (got != want) report.multiplicativity_failures.push_back({a, b, got, want, homogeneous});
  };

  for (BasisId i = 0; i < A.basis_size(); ++i)
    for (BasisId j = 0; j < A.basis_size() && A.product_defined(i, j); ++j) {
      check_product(basis_element(i), basis_element(j), true);
      ++report.homogeneous_pairs_checked;
    }
  for (const auto& [a, b] : homogeneous_pairs(A, seed, n_samples / 4)) {
    check_product(a, b, true);
    ++report.homogeneous_pairs_checked;
  }
  for (const auto& [a, b] : sample_element_pairs(A, seed, n_samples)) {
    Element sum = a;
    add_scaled(sum, b, Rational(1));
    if (gv.value(A, sum) > trop_add(gv.value(A, a), gv.value(A, b)))
      report.subadditivity_failures.emplace_back(a, b);
    if (full) check_product(a, b, false);
    ++report.sampled_pairs_checked;
  }
  return report;
}

}  // namespace

GradedAxiomReport check_graded_axioms(const GradedAlgebra& A, const GradedValuation& gv,
                                      std::uint64_t seed, std::size_t n_samples) {
  return run_axioms(A, gv, seed, n_samples, false);
}

GradedAxiomReport check_full_axioms(const GradedAlgebra& A, const GradedValuation& gv,
                                    std::uint64_t seed, std::size_t n_samples) {
  return run_axioms(A, gv, seed, n_samples, true);
}

TriangularityResult check_lower_triangular(const GradedAlgebra& A, const LexFunctional& h) {
  TriangularityResult out;
  for (BasisId i = 0; i < A.basis_size(); ++i)
    for (BasisId j = 0; j < A.basis_size() && A.product_defined(i, j); ++j) {
      const Element& p = A.product(i, j);
      auto fail = [&](std::string why) {
        out.holds = false;
        out.witness = std::make_pair(i, j);
        out.reason = std::move(why);
      };
      if (p.empty()) {
        fail("product vanishes");
        return out;
      }
      const auto top = add_values(h.value(A.grade(i)), h.value(A.grade(j)));
      bool attained = false;
      for (const auto& [id, c] : p) {
        auto v = h.value(A.grade(id));
        if (top < v) {
          fail("grade " + grade_tuple(A.grade(id)) + " lies above h(s1) + h(s2)");
          return out;
        }
        if (v == top) attained = true;
      }
      if (!attained) {
        fail("no grade of the product attains h(s1) + h(s2)");
        return out;
      }
    }
  return out;
}

MonoidTheoremReport check_monoid_theorem(const GradedAlgebra& A, const LexFunctional& w,
                                         std::uint64_t seed, std::size_t n_samples) {
  MonoidTheoremReport report;
  auto meets_sum = [&](const Element& p, const Grade& target) {
    for (const auto& [id, c] : p)
      if (A.grade(id) == target) return true;
    return false;
  };
  for (BasisId i = 0; i < A.basis_size() && report.hypothesis_products; ++i)
    for (BasisId j = 0; j < A.basis_size() && A.product_defined(i, j); ++j)
      if (!meets_sum(A.product(i, j), add_grades(A.grade(i), A.grade(j)))) {
        report.hypothesis_products = false;
        report.product_witness = std::make_pair(i, j);
        break;
      }
  if (report.hypothesis_products)
    for (const auto& [a, b] : homogeneous_pairs(A, seed, n_samples / 4))
      if (!meets_sum(A.multiply(a, b), add_grades(A.grade(a.begin()->first), A.grade(b.begin()->first)))) {
        report.hypothesis_products = false;
        report.product_witness = std::make_pair(a.begin()->first, b.begin()->first);
        break;
      }

  std::vector<std::pair<std::vector<Rational>, Grade>> values;
  for (const auto& c : A.components()) values.emplace_back(w.value(c.grade), c.grade);
  std::sort(values.begin(), values.end());
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i].first == values[i - 1].first) {
      report.hypothesis_total_order = false;
      report.order_witness = std::make_pair(values[i - 1].second, values[i].second);
      break;
    }

  for (const auto& [a, b] : sample_element_pairs(A, seed, n_samples)) {
    ++report.pairs_checked;
    auto got = lex_value(A, w, A.multiply(a, b));
    auto want = add_values(*lex_value(A, w, a), *lex_value(A, w, b));
    if (!got || *got != want) report.conclusion_failures.emplace_back(a, b);
  }
  return report;
}

GradedAlgebra associated_graded(const GradedAlgebra& A, const LexFunctional& h) {
  TriangularityResult t = check_lower_triangular(A, h);
  if (!t.holds)
    throw Error(ErrorKind::NotLowerTriangular,
                "multiplication is not lower-triangular: " + A.label(t.witness->first) + "*" +
                    A.label(t.witness->second) + ": " + t.reason);
  std::map<std::pair<BasisId, BasisId>, Element> table;
  for (const auto& [k, p] : A.table()) {
    const auto top = add_values(h.value(A.grade(k.first)), h.value(A.grade(k.second)));
    Element kept;
    for (const auto& [id, c] : p)
      if (h.value(A.grade(id)) == top) kept.emplace(id, c);
    table.emplace(k, std::move(kept));
  }
  return A.with_table(table);
}

namespace {

constexpr std::uint64_t kPrime = 2305843009213693951ULL;  // 2^61 - 1
__extension__ typedef unsigned __int128 u128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>((static_cast<u128>(a) * b) % kPrime);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mul_mod(a, a))
    if (e & 1) r = mul_mod(r, a);
  return r;
}

std::uint64_t reduce_mod(const Rational& q) {
  std::uint64_t n = mpz_fdiv_ui(q.get_num_mpz_t(), kPrime);
  std::uint64_t d = mpz_fdiv_ui(q.get_den_mpz_t(), kPrime);
  return mul_mod(n, pow_mod(d, kPrime - 2));
}

// Column rank modulo a large prime; a lower bound for the rank over Q.
std::size_t rank_mod_p(const std::vector<Element>& cols) {
  std::map<BasisId, std::map<BasisId, std::uint64_t>> pivots;
  std::size_t rank = 0;
  for (const auto& col : cols) {
    std::map<BasisId, std::uint64_t> v;
    for (const auto& [id, c] : col) {
      std::uint64_t x = reduce_mod(c);
      if (x) v[id] = x;
    }
    while (!v.empty()) {
      auto lead = v.begin();
      auto pit = pivots.find(lead->first);
      if (pit == pivots.end()) {
        std::uint64_t inv = pow_mod(lead->second, kPrime - 2);
        for (auto& [id, x] : v) x = mul_mod(x, inv);
        pivots.emplace(lead->first, v);
        ++rank;
        break;
      }
      std::uint64_t f = lead->second;
      for (const auto& [id, x] : pit->second) {
        std::uint64_t sub = mul_mod(f, x);
        auto& slot = v[id];
        slot = (slot + kPrime - sub) % kPrime;
        if (slot == 0) v.erase(id);
      }
    }
  }
  return rank;
}

// A nonzero kernel vector of the column matrix, exactly.
std::optional<std::vector<Rational>> kernel_vector(const std::vector<Element>& cols) {
  std::map<BasisId, std::pair<Element, std::vector<Rational>>> pivots;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    Element v = cols[c];
    std::vector<Rational> combo(cols.size(), Rational(0));
    combo[c] = 1;
    while (!v.empty()) {
      auto lead = v.begin();
      auto pit = pivots.find(lead->first);
      if (pit == pivots.end()) break;
      Rational f = lead->second / pit->second.first.at(lead->first);
      add_scaled(v, pit->second.first, Rational(-f));
      for (std::size_t k = 0; k < combo.size(); ++k) combo[k] -= f * pit->second.second[k];
    }
    if (v.empty()) return combo;
    BasisId lead = v.begin()->first;
    pivots.emplace(lead, std::make_pair(std::move(v), std::move(combo)));
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::pair<Element, Element>> zero_divisor_search(const GradedAlgebra& A,
                                                               const Rational& bound) {
  const Rational limit = std::min(bound, A.truncation_bound());
  std::vector<Element> candidates;
  for (BasisId i = 0; i < A.basis_size(); ++i)
    if (2 * A.degree(i) <= limit) candidates.push_back(basis_element(i));
  for (BasisId i = 0; i < A.basis_size(); ++i)
    for (BasisId j = i + 1; j < A.basis_size(); ++j) {
      if (A.degree(i) != A.degree(j) || 2 * A.degree(i) > limit) continue;
      for (int sign : {1, -1}) {
        Element e = basis_element(i);
        add_scaled(e, basis_element(j), Rational(sign));
        candidates.push_back(std::move(e));
      }
    }

  for (const auto& a : candidates) {
    const Rational room = limit - A.degree(a);
    std::vector<BasisId> ids;
    std::vector<Element> cols;
    for (BasisId b = 0; b < A.basis_size() && A.degree(b) <= room; ++b) {
      ids.push_back(b);
      cols.push_back(A.multiply(a, basis_element(b)));
    }
    if (rank_mod_p(cols) == cols.size()) continue;
    auto kernel = kernel_vector(cols);
    if (!kernel) continue;
    Element b;
    for (std::size_t k = 0; k < ids.size(); ++k) add_scaled(b, basis_element(ids[k]), (*kernel)[k]);
    return std::make_pair(a, b);
  }
  return std::nullopt;
}

Coarsening coarsen(const GradedAlgebra& A, const std::vector<std::vector<int>>& M,
                   std::vector<Rational> truncation_weights) {
  auto image = [&](const Grade& s) {
    Grade out;
    for (const auto& row : M) {
      if (row.size() != s.size()) throw Error(ErrorKind::DimensionMismatch, "coarsening row has the wrong length");
      int x = 0;
      for (std::size_t i = 0; i < s.size(); ++i) x += row[i] * s[i];
      out.push_back(x);
    }
    return out;
  };
  GradedAlgebraSpec spec;
  spec.monoid_dim = M.size();
  spec.truncation_weights = std::move(truncation_weights);
  spec.truncation_bound = A.truncation_bound();
  std::map<Grade, int> sizes;
  std::vector<BasisKey> new_keys(A.basis_size());
  for (BasisId id = 0; id < A.basis_size(); ++id) {
    Grade g = image(A.grade(id));
    new_keys[id] = BasisKey{g, sizes[g]++};
  }
  for (const auto& [g, n] : sizes) spec.components.push_back({g, n});
  for (const auto& [k, e] : A.table()) {
    GradedAlgebraSpec::Product p{new_keys[k.first], new_keys[k.second], {}};
    for (const auto& [id, c] : e) p.terms.emplace_back(new_keys[id], c);
    spec.products.push_back(std::move(p));
  }
  for (BasisId id = 0; id < A.basis_size(); ++id) spec.labels[new_keys[id]] = A.label(id);
  GradedAlgebra B = GradedAlgebra::build(spec);
  std::vector<BasisId> ids(A.basis_size());
  for (BasisId id = 0; id < A.basis_size(); ++id) ids[id] = *B.find(new_keys[id]);
  return Coarsening{std::move(B), std::move(ids)};
}

GradedAlgebra monoid_algebra(const std::vector<std::string>& vars, int N) {
  const std::size_t k = vars.size();
  Ring ring = make_ring(vars);
  GradedAlgebraSpec spec;
  spec.monoid_dim = k;
  spec.truncation_weights.assign(k, Rational(1));
  spec.truncation_bound = N;
  std::vector<ExponentVector> mons;
  for (int d = 0; d <= N; ++d)
    for (auto& e : monomials_of_degree(k, d)) mons.push_back(std::move(e));
  for (const auto& e : mons) {
    spec.components.push_back({e.values(), 1});
    spec.labels[BasisKey{e.values(), 0}] = monomial_to_string(*ring, e);
  }
  for (const auto& a : mons)
    for (const auto& b : mons)
      if (a.degree() + b.degree() <= N)
        spec.products.push_back({BasisKey{a.values(), 0}, BasisKey{b.values(), 0},
                                 {{BasisKey{(a + b).values(), 0}, Rational(1)}}});
  return GradedAlgebra::build(spec);
}

}  // namespace tropval
