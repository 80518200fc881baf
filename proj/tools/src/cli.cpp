#include "tropval_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <utility>

#include "tropval/cones.hpp"
#include "tropval/error.hpp"
#include "tropval/graded.hpp"
#include "tropval/graded_io.hpp"
#include "tropval/initial.hpp"
#include "tropval/parser.hpp"
#include "tropval/sl2.hpp"
#include "tropval/valuation.hpp"

namespace tropval::cli {
namespace {

constexpr std::uint64_t kDefaultSeed = 7;
constexpr std::size_t kDefaultSamples = 200;
constexpr int kDefaultDegreeBound = 3;

const char* const kVerbs[] = {"parse",        "initial",      "trop-check", "val-check",
                              "cone",         "arrow",        "facets",     "fan",
                              "graded-check", "monoid-check", "gr",         "sl2lab"};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Human-readable lines followed by the fenced key: value block. Emitters of
/// the graded file format prefix everything with '#' so the output stays parseable.
class Report {
 public:
  explicit Report(std::string check) : check_(std::move(check)) {}

  void line(std::string text) { lines_.push_back(std::move(text)); }
  void result(std::string key, std::string value) {
    results_.emplace_back(std::move(key), std::move(value));
  }
  void body(std::string text) { body_ = std::move(text); }
  void commented(bool on) { commented_ = on; }

  void print(std::ostream& out) const {
    const std::string p = commented_ ? "# " : "";
    out << p << "check: " << check_ << '\n';
    for (const auto& l : lines_) out << p << l << '\n';
    out << body_;
    out << p << "BEGIN-RESULT\n";
    for (const auto& [k, v] : results_) out << p << k << ": " << v << '\n';
    out << p << "END-RESULT\n";
  }

 private:
  std::string check_;
  std::vector<std::string> lines_;
  std::vector<std::pair<std::string, std::string>> results_;
  std::string body_;
  bool commented_ = false;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string paren(const WeightVector& w) { return "(" + w.to_string() + ")"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Options shared by the verbs; each verb registers the subset it accepts.
struct Options {
  std::string ideal;
  std::vector<std::string> weights;
  std::string mode;
  std::uint64_t seed = kDefaultSeed;
  std::size_t samples = kDefaultSamples;
  int degree_bound = kDefaultDegreeBound;
  std::optional<int> truncation;
  std::string coeffval;
  std::string algebra;
  std::string functional;
  std::vector<std::string> overrides;
  int box = 1;
  int denominator = 1;
  std::string kind;
  int size = 0;
};

void add_ideal(CLI::App& app, Options& o) {
  app.add_option("--ideal", o.ideal, "presentation file")->required();
  app.add_option("--coeffval", o.coeffval,
                 "coefficient valuation: 'trivial' or 'tadic <var> <value>'");
}

void add_weights(CLI::App& app, Options& o, const std::string& help) {
  app.add_option("--weight,-w", o.weights, help + " (one quoted argument per vector, e.g. -w \"1 -1\")")->allow_extra_args(false);
}

void add_sampling(CLI::App& app, Options& o) {
  app.add_option("--seed", o.seed, "sampling seed")->capture_default_str();
  app.add_option("--samples", o.samples, "number of sampled pairs")->capture_default_str();
  app.add_option("--degree-bound", o.degree_bound, "degree bound for random polynomials")
      ->capture_default_str();
}

void add_mode(CLI::App& app, Options& o, std::vector<std::string> allowed, std::string fallback) {
  o.mode = std::move(fallback);
  app.add_option("--mode", o.mode, "check mode")
      ->check(CLI::IsMember(std::move(allowed)))
      ->capture_default_str();
}

void add_algebra(CLI::App& app, Options& o) {
  app.add_option("--algebra", o.algebra,
                 "graded algebra file or builtin:poly3, builtin:rep-ring, builtin:branching")
      ->required();
  app.add_option("--truncation", o.truncation, "truncation degree of a builtin algebra");
}

Presentation load_presentation(const Options& o, std::optional<WeightVector>* file_weight) {
  PresentationFile pf = parse_presentation(read_file(o.ideal));
  Presentation P = std::move(pf.presentation);
  if (!o.coeffval.empty()) {
    P = Presentation(P.ring, P.ideal_gens, parse_coeffval(*P.ring, o.coeffval));
  }
  if (file_weight) *file_weight = pf.weight;
  return P;
}

std::vector<WeightVector> weights_for(const Options& o, const Presentation& P,
                                      const std::optional<WeightVector>& file_weight) {
  std::vector<WeightVector> ws;
  for (const auto& text : o.weights) {
    WeightVector w = WeightVector::parse(text);
    if (w.size() != P.dimension())
      throw UsageError("weight '" + text + "' has " + std::to_string(w.size()) +
                       " entries, ring has " + std::to_string(P.dimension()));
    ws.push_back(std::move(w));
  }
  if (ws.empty() && file_weight) ws.push_back(*file_weight);
  return ws;
}

void require_weights(const std::vector<WeightVector>& ws, std::size_t lo, std::size_t hi) {
  if (ws.size() < lo || ws.size() > hi) {
    std::string want = lo == hi ? std::to_string(lo)
                                : std::to_string(lo) + " to " + std::to_string(hi);
    if (hi == static_cast<std::size_t>(-1)) want = "at least " + std::to_string(lo);
    throw UsageError("expected " + want + " --weight option(s), got " +
                     std::to_string(ws.size()));
  }
}

std::pair<std::string, std::string> split_override(const std::string& text) {
  const auto eq = text.rfind('=');
  if (eq == std::string::npos) throw UsageError("override '" + text + "' needs 'element = value'");
  return {text.substr(0, eq), text.substr(eq + 1)};
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

void print_presentation(Report& r, const Presentation& P) {
  std::istringstream in(P.to_string());
  for (std::string l; std::getline(in, l);) r.line(l);
}

// ---------------------------------------------------------------------------
// Verbs over presentations

int verb_parse(const Options& o, Report& r) {
  std::optional<WeightVector> fw;
  const Presentation P = load_presentation(o, &fw);
  print_presentation(r, P);
  if (fw) r.line("weight " + fw->to_string() + ";");
  r.result("verdict", "parsed");
  r.result("variables", std::to_string(P.dimension()));
  r.result("generators", std::to_string(P.ideal_gens.size()));
  return kPass;
}

int verb_initial(const Options& o, Report& r) {
  std::optional<WeightVector> fw;
  const Presentation P = load_presentation(o, &fw);
  const auto ws = weights_for(o, P, fw);
  require_weights(ws, 1, 1);
  const WeightVector& w = ws[0];
  const bool direct = P.effective_weight(w).is_nonnegative();
  const auto gens = initial_ideal(P, w);
  r.line("weight " + paren(w));
  r.line("initial ideal generators:");
  for (const auto& g : gens) r.line("  " + g.to_string());
  r.result("route", direct ? "direct" : "homogenized");
  r.result("generators", std::to_string(gens.size()));
  r.result("monomial_free", yes_no(!contains_monomial(gens, P.ring).contains));
  return kPass;
}

int verb_trop_check(const Options& o, Report& r) {
  std::optional<WeightVector> fw;
  const Presentation P = load_presentation(o, &fw);
  const auto ws = weights_for(o, P, fw);
  require_weights(ws, 1, 1);
  const bool certified = o.mode == "certified";
  const auto res = check_trop_membership(
      P, ws[0], certified ? MembershipMode::Certified : MembershipMode::Prevariety);
  r.line("weight " + paren(ws[0]));
  r.line(std::string("mode ") + o.mode);
  if (certified) {
    r.result("verdict", res.member ? "monomial-free" : "contains-monomial");
    if (res.witness_monomial)
      r.result("witness_monomial", monomial_to_string(*P.ring, *res.witness_monomial));
  } else {
    r.result("verdict", res.member ? "in-prevariety" : "not-in-prevariety");
    if (res.witness_generator) r.result("witness_generator", res.witness_generator->to_string());
  }
  return res.member ? kPass : kRefuted;
}

CandidateValuation with_poly_overrides(const Options& o, const Presentation& P,
                                       CandidateValuation v) {
  for (const auto& text : o.overrides) {
    const auto [lhs, rhs] = split_override(text);
    v = v.with_override(parse_poly(P.ring, lhs), TropicalValue::parse(trim(rhs)));
  }
  return v;
}

std::string value_list(const CandidateValuation& v) {
  std::string out;
  for (std::size_t i = 0; i < v.ring()->size(); ++i) {
    if (i) out += ' ';
    out += v.evaluate(Polynomial::variable(v.ring(), i)).to_string();
  }
  return "(" + out + ")";
}

int verb_val_check(const Options& o, Report& r) {
  std::optional<WeightVector> fw;
  const Presentation P = load_presentation(o, &fw);
  const auto ws = weights_for(o, P, fw);
  require_weights(ws, 1, 1);
  const auto v = with_poly_overrides(o, P, CandidateValuation::weight_induced(P, ws[0]));
  const AxiomReport rep = check_axioms(v, o.seed, o.samples, o.degree_bound);
  r.line("weight " + paren(ws[0]));
  r.line("seed " + std::to_string(o.seed) + ", samples " + std::to_string(o.samples) +
         ", degree bound " + std::to_string(o.degree_bound));
  r.line("values on generators " + value_list(v));
  r.result("verdict", std::string(to_string(rep.verdict)));
  r.result("pairs_checked", std::to_string(rep.pairs_checked));
  r.result("multiplicativity_failures", std::to_string(rep.multiplicativity_failures.size()));
  r.result("subadditivity_violations", std::to_string(rep.subadditivity_violations));
  r.result("strict_drops", std::to_string(rep.strict_drops));
  r.result("p1_failures", std::to_string(rep.p1_failures.size()));
  r.result("exact_by_structure", yes_no(rep.exact_by_structure));
  if (!rep.multiplicativity_failures.empty()) {
    const auto& f = rep.multiplicativity_failures.front();
    r.result("witness_a", f.a.to_string());
    r.result("witness_b", f.b.to_string());
    r.result("value_product", f.product_value.to_string());
    r.result("value_expected", f.expected.to_string());
  }
  const bool pass = rep.verdict == AxiomVerdict::Valuation && rep.zero_axiom_holds &&
                    rep.subadditivity_violations == 0;
  return pass ? kPass : kRefuted;
}

void put_relation(Report& r, const RelationVerdict& rv) {
  r.result("relation", std::string(to_string(rv.relation)));
  r.result("status", std::string(to_string(rv.status)));
  r.result("samples", std::to_string(rv.samples));
  if (!rv.certificate.empty()) r.result("certificate", rv.certificate);
  if (rv.witness_a) r.result("witness_a", rv.witness_a->to_string());
  if (rv.witness_b) r.result("witness_b", rv.witness_b->to_string());
}

int verb_cone(const Options& o, Report& r) {
  std::optional<WeightVector> fw;
  const Presentation P = load_presentation(o, &fw);
  const auto ws = weights_for(o, P, fw);
  require_weights(ws, 2, 3);
  std::vector<CandidateValuation> vs;
  for (const auto& w : ws) vs.push_back(CandidateValuation::weight_induced(P, w));
  r.line("v  " + paren(ws[0]));
  if (ws.size() == 2) {
    r.line("w  " + paren(ws[1]));
    const auto rv = implies_check(vs[0], vs[1], o.seed, o.samples, o.mode == "exact");
    put_relation(r, rv);
    return rv.refuted() ? kRefuted : kPass;
  }
  r.line("w1 " + paren(ws[1]));
  r.line("w2 " + paren(ws[2]));
  const ConeSumResult cs = cone_sum(vs[0], vs[1], vs[2], o.seed, o.samples, o.degree_bound);
  r.line("sum values on generators " + value_list(cs.sum));
  r.result("verdict", std::string(to_string(cs.axioms.verdict)));
  r.result("pairs_checked", std::to_string(cs.axioms.pairs_checked));
  r.result("multiplicativity_failures",
           std::to_string(cs.axioms.multiplicativity_failures.size()));
  r.result("subadditivity_violations", std::to_string(cs.axioms.subadditivity_violations));
  put_relation(r, cs.implies);
  const bool pass = cs.axioms.verdict == AxiomVerdict::Valuation &&
                    cs.axioms.subadditivity_violations == 0 && !cs.implies.refuted();
  return pass ? kPass : kRefuted;
}

int verb_arrow(const Options& o, Report& r) {
  std::optional<WeightVector> fw;
  const Presentation P = load_presentation(o, &fw);
  const auto ws = weights_for(o, P, fw);
  require_weights(ws, 2, 2);
  r.line("v " + paren(ws[0]));
  r.line("w " + paren(ws[1]));
  const auto rv = arrow_check(P, ws[0], ws[1]);
  put_relation(r, rv);
  return rv.refuted() ? kRefuted : kPass;
}

int verb_facets(const Options& o, Report& r) {
  std::optional<WeightVector> fw;
  const Presentation P = load_presentation(o, &fw);
  const auto ws = weights_for(o, P, fw);
  require_weights(ws, 1, static_cast<std::size_t>(-1));
  const auto classes = facet_classes(P, ws);
  r.result("classes", std::to_string(classes.size()));
  for (std::size_t k = 0; k < classes.size(); ++k) {
    std::string members;
    for (auto m : classes[k].members) {
      if (!members.empty()) members += ' ';
      members += std::to_string(m + 1);
    }
    r.result("class " + std::to_string(k + 1),
             "repr " + paren(classes[k].representative) + ", members " + members);
  }
  return kPass;
}

int verb_fan(const Options& o, Report& r) {
  const Presentation P = load_presentation(o, nullptr);
  if (o.box < 0 || o.denominator <= 0) throw UsageError("--box must be >= 0, --denominator > 0");
  const auto classes = enumerate_fan(P, o.box, o.denominator);
  r.line("box " + std::to_string(o.box) + ", denominator " + std::to_string(o.denominator));
  std::size_t tropical = 0;
  for (const auto& c : classes) tropical += c.monomial_free ? 1 : 0;
  r.result("classes", std::to_string(classes.size()));
  r.result("monomial_free_classes", std::to_string(tropical));
  for (std::size_t k = 0; k < classes.size(); ++k) {
    r.result("class " + std::to_string(k + 1), "repr " + paren(classes[k].representative) +
                                                   ", monomial_free: " +
                                                   yes_no(classes[k].monomial_free));
  }
  return kPass;
}

// ---------------------------------------------------------------------------
// Graded verbs

GradedAlgebra load_algebra(const Options& o) {
  const std::string prefix = "builtin:";
  if (o.algebra.rfind(prefix, 0) == 0) {
    const std::string name = o.algebra.substr(prefix.size());
    if (name == "poly3") return monoid_algebra({"x", "y", "z"}, o.truncation.value_or(4));
    if (name == "rep-ring") return sl2_rep_ring(o.truncation.value_or(6));
    if (name == "branching") return sl2_branching_algebra(o.truncation.value_or(4));
    throw UsageError("unknown builtin algebra '" + name + "'");
  }
  return parse_graded_algebra(read_file(o.algebra));
}

LexFunctional functional_for(const Options& o, const GradedAlgebra& A) {
  if (o.functional.empty())
    return LexFunctional::single(std::vector<Rational>(A.monoid_dim(), Rational(1)));
  return parse_lex_functional(o.functional, A.monoid_dim());
}

std::string elem(const GradedAlgebra& A, const Element& e) { return A.to_string(e); }

int verb_graded_check(const Options& o, Report& r) {
  const GradedAlgebra A = load_algebra(o);
  const LexFunctional h = functional_for(o, A);
  GradedValuation gv(h);
  for (const auto& text : o.overrides) {
    const auto [lhs, rhs] = split_override(text);
    const Element e = parse_element(A, lhs);
    gv = gv.with_override(A, e, TropicalValue::parse(trim(rhs)));
    r.line("override v(" + elem(A, e) + ") = " + trim(rhs));
  }
  const bool full = o.mode == "full";
  r.line("functional " + h.to_string());
  r.line("basis size " + std::to_string(A.basis_size()));
  const GradedAxiomReport rep = full ? check_full_axioms(A, gv, o.seed, o.samples)
                                     : check_graded_axioms(A, gv, o.seed, o.samples);
  r.result("verdict", rep.passes() ? (full ? "valuation" : "graded_valuation")
                                   : (full ? "not_a_valuation" : "not_a_graded_valuation"));
  r.result("mode", o.mode);
  r.result("homogeneous_pairs_checked", std::to_string(rep.homogeneous_pairs_checked));
  r.result("sampled_pairs_checked", std::to_string(rep.sampled_pairs_checked));
  r.result("multiplicativity_failures", std::to_string(rep.multiplicativity_failures.size()));
  r.result("subadditivity_failures", std::to_string(rep.subadditivity_failures.size()));
  if (!rep.multiplicativity_failures.empty()) {
    const auto& f = rep.multiplicativity_failures.front();
    r.result("witness_a", elem(A, f.a));
    r.result("witness_b", elem(A, f.b));
    r.result("value_product", f.product_value.to_string());
    r.result("value_expected", f.expected.to_string());
  } else if (!rep.subadditivity_failures.empty()) {
    r.result("witness_a", elem(A, rep.subadditivity_failures.front().first));
    r.result("witness_b", elem(A, rep.subadditivity_failures.front().second));
  }
  return rep.passes() ? kPass : kRefuted;
}

int verb_monoid_check(const Options& o, Report& r) {
  const GradedAlgebra A = load_algebra(o);
  const LexFunctional w = functional_for(o, A);
  r.line("functional " + w.to_string());
  r.line("basis size " + std::to_string(A.basis_size()));
  const MonoidTheoremReport rep = check_monoid_theorem(A, w, o.seed, o.samples);
  r.result("hypothesis_products", yes_no(rep.hypothesis_products));
  r.result("hypothesis_total_order", yes_no(rep.hypothesis_total_order));
  r.result("pairs_checked", std::to_string(rep.pairs_checked));
  r.result("conclusion_failures", std::to_string(rep.conclusion_failures.size()));
  if (rep.product_witness) {
    r.result("witness_a", A.label(rep.product_witness->first));
    r.result("witness_b", A.label(rep.product_witness->second));
  } else if (rep.order_witness) {
    r.result("witness_a", "(" + to_string(std::vector<Rational>(rep.order_witness->first.begin(),
                                                                rep.order_witness->first.end())) +
                              ")");
    r.result("witness_b", "(" + to_string(std::vector<Rational>(rep.order_witness->second.begin(),
                                                                rep.order_witness->second.end())) +
                              ")");
  } else if (!rep.conclusion_failures.empty()) {
    r.result("witness_a", elem(A, rep.conclusion_failures.front().first));
    r.result("witness_b", elem(A, rep.conclusion_failures.front().second));
  }
  const bool pass = rep.hypotheses_hold() && rep.conclusion_holds();
  r.result("verdict", pass ? "holds" : "fails");
  return pass ? kPass : kRefuted;
}

int verb_gr(const Options& o, Report& r) {
  const GradedAlgebra A = load_algebra(o);
  const LexFunctional h = functional_for(o, A);
  r.commented(true);
  r.line("functional " + h.to_string());
  const TriangularityResult tri = check_lower_triangular(A, h);
  if (!tri.holds) {
    r.result("verdict", "not_lower_triangular");
    r.result("reason", tri.reason);
    if (tri.witness) {
      r.result("witness_a", A.label(tri.witness->first));
      r.result("witness_b", A.label(tri.witness->second));
    }
    return kRefuted;
  }
  const GradedAlgebra G = associated_graded(A, h);
  r.body(format_graded_algebra(G));
  r.result("verdict", "lower_triangular");
  r.result("basis_size", std::to_string(G.basis_size()));
  r.result("products", std::to_string(G.table().size()));
  return kPass;
}

int verb_sl2lab(const Options& o, Report& r) {
  if (o.size < 0) throw UsageError("N must be non-negative");
  const GradedAlgebra A = o.kind == "rep-ring" ? sl2_rep_ring(o.size) : sl2_branching_algebra(o.size);
  r.commented(true);
  r.line(o.kind + " " + std::to_string(o.size));
  r.body(format_graded_algebra(A));
  r.result("basis_size", std::to_string(A.basis_size()));
  r.result("components", std::to_string(A.components().size()));
  r.result("products", std::to_string(A.table().size()));
  return kPass;
}

std::string usage() {
  std::string out = "usage: tropval <verb> [options]\nverbs:";
  for (const char* v : kVerbs) out += std::string(" ") + v;
  return out + "\nrun 'tropval <verb> --help' for the options of a verb\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (args.empty() || args[0] == "--help" || args[0] == "-h") {
    (args.empty() ? err : out) << usage();
    return args.empty() ? kUsage : kPass;
  }
  const std::string verb = args[0];
  if (std::find(std::begin(kVerbs), std::end(kVerbs), verb) == std::end(kVerbs)) {
    err << "error: unknown verb '" << verb << "'\n" << usage();
    return kUsage;
  }

  Options o;
  CLI::App app("tropval " + verb, "tropval " + verb);
  int (*handler)(const Options&, Report&) = nullptr;
  std::string check;

  if (verb == "parse") {
    add_ideal(app, o);
    handler = verb_parse;
    check = "parse presentation";
  } else if (verb == "initial") {
    add_ideal(app, o);
    add_weights(app, o, "weight vector");
    handler = verb_initial;
    check = "initial ideal in_w(I) in canonical reduced form";
  } else if (verb == "trop-check") {
    add_ideal(app, o);
    add_weights(app, o, "weight vector");
    add_mode(app, o, {"certified", "prevariety"}, "certified");
    handler = verb_trop_check;
    check = "tropical variety membership";
  } else if (verb == "val-check") {
    add_ideal(app, o);
    add_weights(app, o, "weight vector");
    add_sampling(app, o);
    app.add_option("--override", o.overrides, "'polynomial = value', repeatable");
    handler = verb_val_check;
    check = "valuation axioms for the weight-induced function v_w";
  } else if (verb == "cone") {
    add_ideal(app, o);
    add_weights(app, o, "v then w (implication) or v, w1, w2 (cone sum)");
    add_sampling(app, o);
    add_mode(app, o, {"exact", "sampled"}, "exact");
    handler = verb_cone;
    check = "cone relation v => w, or closure of v => w1, w2 under sums";
  } else if (verb == "arrow") {
    add_ideal(app, o);
    add_weights(app, o, "v then w");
    handler = verb_arrow;
    check = "arrow relation v -> w: in_v(in_w(I)) == in_v(I)";
  } else if (verb == "facets") {
    add_ideal(app, o);
    add_weights(app, o, "weight vectors to classify, repeatable");
    handler = verb_facets;
    check = "facet classes by equal initial ideal";
  } else if (verb == "fan") {
    add_ideal(app, o);
    app.add_option("--box", o.box, "grid half-width B")->capture_default_str();
    app.add_option("--denominator", o.denominator, "grid denominator d")->capture_default_str();
    handler = verb_fan;
    check = "Groebner fan classes on the grid {k/d : |k| <= B d}";
  } else if (verb == "graded-check") {
    add_algebra(app, o);
    app.add_option("--functional", o.functional, "lex functional rows separated by '|'");
    app.add_option("--override", o.overrides, "'element = value', repeatable");
    o.seed = kDefaultSeed;
    app.add_option("--seed", o.seed, "sampling seed")->capture_default_str();
    app.add_option("--samples", o.samples, "number of sampled pairs")->capture_default_str();
    add_mode(app, o, {"graded", "full"}, "graded");
    handler = verb_graded_check;
    check = "graded valuation axioms";
  } else if (verb == "monoid-check") {
    add_algebra(app, o);
    app.add_option("--functional", o.functional, "lex functional rows separated by '|'");
    app.add_option("--seed", o.seed, "sampling seed")->capture_default_str();
    app.add_option("--samples", o.samples, "number of sampled pairs")->capture_default_str();
    handler = verb_monoid_check;
    check = "monoid-graded multiplicativity: Cartan components and full multiplicativity";
  } else if (verb == "gr") {
    add_algebra(app, o);
    app.add_option("--functional", o.functional, "lex functional rows separated by '|'");
    handler = verb_gr;
    check = "associated graded algebra of a lower-triangular multiplication";
  } else {
    app.add_option("kind", o.kind, "rep-ring or branching")
        ->required()
        ->check(CLI::IsMember({"rep-ring", "branching"}));
    app.add_option("N", o.size, "truncation degree")->required();
    handler = verb_sl2lab;
    check = "SL2 algebra builder";
  }

  try {
    std::vector<std::string> rest(args.rbegin(), args.rend() - 1);
    app.parse(rest);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  Report report(check);
  try {
    const int code = handler(o, report);
    report.print(out);
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return e.is_input_error() ? kUsage : kPrecondition;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  }
}

}  // namespace tropval::cli
