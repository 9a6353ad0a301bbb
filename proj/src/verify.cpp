#include "sdual/verify.hpp"

#include "sdual/affine_characters.hpp"
#include "sdual/conformal_embedding.hpp"
#include "sdual/correlator.hpp"
#include "sdual/fusion.hpp"
#include "sdual/pic_relation.hpp"
#include "sdual/qsqrt5.hpp"
#include "sdual/s_matrix.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

namespace sdual {

namespace {

const RootDatum& alg(const char* name) { return root_datum(LieAlgebraId::parse(name)); }

struct Checker {
  CriterionResult& out;

  template <class A, class B>
  void eq(const std::string& what, const A& got, const B& want)
  {
    std::ostringstream s;
    const bool ok = got == want;
    s << (ok ? "ok   " : "FAIL ") << what << ": " << show(got);
    if (!ok) s << " (expected " << show(want) << ")";
    record(ok, s.str());
  }

  void that(const std::string& what, bool ok) { record(ok, std::string(ok ? "ok   " : "FAIL ") + what); }

  void record(bool ok, std::string line)
  {
    out.pass = out.pass && ok;
    out.details.push_back(std::move(line));
  }

  static std::string show(const Rational& q) { return to_string(q); }
  static std::string show(const BigInt& z) { return to_string(z); }
  static std::string show(const Polynomial& p) { return p.to_string(); }
  static std::string show(const QSqrt5& x) { return x.to_string(); }
  static std::string show(int v) { return std::to_string(v); }
  static std::string show(bool v) { return v ? "true" : "false"; }
};

BigInt fib(int n)
{
  BigInt a = 0, b = 1;
  for (int i = 0; i < n; ++i) {
    BigInt c = a + b;
    a = b;
    b = c;
  }
  return a;
}

CurveData repeated(const Weight& w, int genus, int n) { return CurveData{genus, std::vector<Weight>(n, w)}; }

void criterion_1(Checker& c)
{
  const Rational cg = conformal_anomaly(alg("G2"), 1);
  const Rational cf = conformal_anomaly(alg("F4"), 1);
  const Rational ce = conformal_anomaly(alg("E8"), 1);
  c.eq("c(G2,1)", cg, make_rational(14, 5));
  c.eq("c(F4,1)", cf, make_rational(26, 5));
  c.eq("c(E8,1)", ce, Rational(8));
  c.eq("c(G2,1)+c(F4,1)", cg + cf, ce);
  c.that("g2+f4 in e8 is conformal", is_conformal(g2_f4_in_e8()));
}

void criterion_2(Checker& c)
{
  const RootDatum& g2 = alg("G2");
  const RootDatum& f4 = alg("F4");
  c.eq("trace anomaly G2 w1", trace_anomaly(g2, 1, g2.fundamental(1)), make_rational(2, 5));
  c.eq("trace anomaly F4 w4", trace_anomaly(f4, 1, f4.fundamental(4)), make_rational(3, 5));
  const BranchingClaim claim = e8_g2_f4_claim();
  c.eq("offset of (w1, w4) in the E8 vacuum", branching_offset(claim, g2.fundamental(1), f4.fundamental(4)), 1);
}

void criterion_3(Checker& c)
{
  const RootDatum& g2 = alg("G2");
  const FusionRing& r = cached_fusion_ring(g2.algebra, 1);
  for (int n = 3; n <= 10; ++n)
    c.eq("dim G2 level 1, genus 0, n=" + std::to_string(n), verlinde_dim(r, repeated(g2.fundamental(1), 0, n)), fib(n - 1));
}

void criterion_4(Checker& c)
{
  const RootDatum& g2 = alg("G2");
  const RootDatum& f4 = alg("F4");
  const FusionRing& rg = cached_fusion_ring(g2.algebra, 1);
  const FusionRing& rf = cached_fusion_ring(f4.algebra, 1);
  for (int g = 0; g <= 5; ++g)
    for (int n = 0; n <= 6; ++n) {
      const std::string at = "(g,n)=(" + std::to_string(g) + "," + std::to_string(n) + ")";
      const QSqrt5 f = closed_form_F(g, n);
      const BigInt dg = verlinde_dim(rg, repeated(g2.fundamental(1), g, n));
      const BigInt df = verlinde_dim(rf, repeated(f4.fundamental(4), g, n));
      c.that("F" + at + " = " + f.to_string() + " is rational", f.is_rational());
      c.eq("G2 " + at, Rational(dg), f.a);
      c.eq("F4 " + at, Rational(df), f.a);
    }
  c.eq("G2 genus 2, no insertions", verlinde_dim(rg, CurveData{2, {}}), BigInt(5));
}

void criterion_5(Checker& c)
{
  const RootDatum& e8 = alg("E8");
  const FusionRing& r = cached_fusion_ring(e8.algebra, 1);
  for (int g = 0; g <= 5; ++g)
    for (int n = 0; n <= 4; ++n)
      c.eq("E8 (g,n)=(" + std::to_string(g) + "," + std::to_string(n) + ")", verlinde_dim(r, repeated(e8.zero(), g, n)),
           BigInt(1));
}

void criterion_6(Checker& c)
{
  const RootDatum& g2 = alg("G2");
  const RootDatum& f4 = alg("F4");
  c.eq("index of g2 adjoint", rep_dynkin_index(g2, g2.weight(g2.highest_root_labels)), Rational(4));
  c.eq("index of g2 7-dim", rep_dynkin_index(g2, g2.fundamental(1)), Rational(1));
  c.eq("index of f4 adjoint", rep_dynkin_index(f4, f4.weight(f4.highest_root_labels)), Rational(9));
  c.eq("index of f4 26-dim", rep_dynkin_index(f4, f4.fundamental(4)), Rational(3));
  const IndexCheckReport rep = embedding_index_check(g2_f4_in_e8());
  c.eq("branching dimension", rep.branching_dimension, BigInt(248));
  for (const IndexCheckRow& row : rep.rows) {
    c.eq("sum for " + row.factor, row.branching_sum, Rational(30));
    c.eq("h_vee(e8) * index for " + row.factor, row.expected, Rational(30));
  }
  c.that("index check", rep.pass);
}

void criterion_7(Checker& c)
{
  const auto t0 = std::chrono::steady_clock::now();
  const BranchingReport rep = verify_branching(e8_g2_f4_claim(), 3);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  for (const BranchingRow& row : rep.rows)
    c.eq("depth " + std::to_string(row.depth) + " summed", row.summed, row.ambient);
  for (const std::string& p : rep.problems) c.that(p, false);
  c.that("branching report", rep.pass);
  if (rep.rows.size() >= 3) {
    c.eq("depth 1 ambient", rep.rows[1].ambient, BigInt(248));
    c.eq("depth 1 = 14+52+182", rep.rows[1].summed, BigInt(14 + 52 + 182));
    c.eq("depth 2 theta/eta", rep.rows[2].ambient, theta_eta_oracle(2)[2]);
    c.eq("depth 2 value", rep.rows[2].ambient, BigInt(4124));
  } else {
    c.that("rows for depths 0..3", false);
  }
  c.that("depth 3 within 60 s", secs < 60);
}

void criterion_8(Checker& c)
{
  PairingEnv env;
  const ReduceResult r1 = reduce(correlator_case(CorrelatorCase::I), env);
  const ReduceResult r2 = reduce(correlator_case(CorrelatorCase::II), env);
  const ReduceResult r3 = reduce(correlator_case(CorrelatorCase::III), env);
  c.that("all reductions terminate", r1.ok && r2.ok && r3.ok);
  c.eq("case I", r1.value, Polynomial(1));
  const Polynomial pa = Polynomial::symbol(Symbol::pa);
  c.eq("case II", r2.value, -pa);
  const auto& terms = r2.value.terms();
  Monomial only_pa{};
  only_pa[static_cast<int>(Symbol::pa)] = 1;
  c.that("case II is a nonzero rational multiple of pa", terms.size() == 1 && terms.begin()->first == only_pa);
  c.that("case III nonzero", !r3.value.is_zero());
  c.eq("case III", r3.value, Polynomial::symbol(Symbol::bH) * Polynomial::symbol(Symbol::pb));
  c.that("case III vanishes at bH = 0", r3.value.substitute(Symbol::bH, 0).is_zero());
}

void criterion_9(Checker& c)
{
  c.eq("irr coefficient at (1,1)", emit_relation(1, 1).coefficient(BoundaryIndex::irr()), Rational(1));
  c.eq("delta_{1,{}} coefficient at (2,0)", emit_relation(2, 0).coefficient(BoundaryIndex{false, 1, {}}),
       make_rational(1, 5));
  for (int g = 1; g <= 5; ++g)
    for (int n = 0; n <= 6; ++n) {
      const ConsistencyReport rep = relation_consistency(g, n);
      c.eq("F(" + std::to_string(g) + "," + std::to_string(n) + ") recursion", rep.F, rep.recursion_sum);
      c.that("boundary numerators are positive integers at (" + std::to_string(g) + "," + std::to_string(n) + ")",
             rep.numerators_ok);
    }
}

void criterion_10(Checker& c)
{
  PrecisionScope scope(50);
  const Real golden = (1 + sqrt(Real(5))) / 2;
  for (const char* name : {"G2", "F4"}) {
    const RootDatum& d = alg(name);
    for (int level = 1; level <= 3; ++level) {
      const std::string at = std::string(name) + " level " + std::to_string(level);
      const SMatrix s = s_matrix(d, level, 50);
      const Real unit = unitarity_residual(s);
      c.that(at + " unitarity residual " + unit.str(3, std::ios_base::scientific) + " < 1e-25", unit < Real("1e-25"));
      const VerlindeFusion vf = verlinde_formula_fusion(s);
      c.that(at + " rounding error " + vf.max_rounding_error.str(3, std::ios_base::scientific) + " < 1e-10",
             vf.max_rounding_error < Real("1e-10"));
      c.that(at + " Verlinde formula = Kac-Walton", vf.table == cached_fusion_ring(d.algebra, level).table);
    }
    const Real q = quantum_dimension(s_matrix(d, 1, 50), 1);
    const Real err = abs(q - golden);
    c.that(std::string(name) + " quantum dimension - golden ratio = " + err.str(3, std::ios_base::scientific),
           err < Real("1e-30"));
  }
}

const char* const kTitles[kCriterionCount] = {
    "conformal anomalies",
    "trace anomalies and offset",
    "Fibonacci dimensions",
    "G2/F4 dimension equality",
    "E8 blocks are one-dimensional",
    "Dynkin index sum rule",
    "graded character branching",
    "three-point correlators",
    "divisor relation",
    "S-matrix cross-check",
};

}  // namespace

CriterionResult run_criterion(int id)
{
  if (id < 1 || id > kCriterionCount) throw std::invalid_argument("criterion must be 1.." + std::to_string(kCriterionCount));
  CriterionResult out;
  out.id = id;
  out.title = kTitles[id - 1];
  out.pass = true;
  Checker c{out};
  const auto t0 = std::chrono::steady_clock::now();
  try {
    switch (id) {
    case 1: criterion_1(c); break;
    case 2: criterion_2(c); break;
    case 3: criterion_3(c); break;
    case 4: criterion_4(c); break;
    case 5: criterion_5(c); break;
    case 6: criterion_6(c); break;
    case 7: criterion_7(c); break;
    case 8: criterion_8(c); break;
    case 9: criterion_9(c); break;
    case 10: criterion_10(c); break;
    }
  } catch (const std::exception& e) {
    c.that(std::string("exception: ") + e.what(), false);
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

std::vector<CriterionResult> run_all_criteria()
{
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id));
  return out;
}

}  // namespace sdual
