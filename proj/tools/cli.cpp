#include "cli.hpp"

#include "sdual/affine_characters.hpp"
#include "sdual/conformal_embedding.hpp"
#include "sdual/correlator.hpp"
#include "sdual/fusion.hpp"
#include "sdual/pic_relation.hpp"
#include "sdual/qsqrt5.hpp"
#include "sdual/s_matrix.hpp"
#include "sdual/verify.hpp"
#include "sdual/weyl.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

namespace sdual {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Json big(const BigInt& z)
{
  if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(z);
  return to_string(z);
}

Json rat(const Rational& q) { return to_string(q); }

Json qsqrt5_json(const QSqrt5& x) { return Json{{"a", rat(x.a)}, {"b", rat(x.b)}}; }

std::string real_str(const Real& x, int digits) { return x.str(digits, std::ios_base::scientific); }

const RootDatum& algebra_arg(const std::string& name)
{
  try {
    return root_datum(LieAlgebraId::parse(name));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Weight weight_arg(const RootDatum& d, const std::vector<int>& labels)
{
  if (static_cast<int>(labels.size()) != d.rank())
    throw UsageError("weight " + labels_to_string(labels) + " needs " + std::to_string(d.rank()) + " labels for " +
                     d.algebra.name());
  for (int v : labels)
    if (v < 0) throw UsageError("weight " + labels_to_string(labels) + " is not dominant");
  return d.weight(labels);
}

// each subcommand fills json and text, and returns an exit status
struct Output {
  Json json = Json::object();
  std::ostringstream text;
  int status = kExitOk;
};

struct Options {
  bool json = false;
  std::string algebra = "G2";
  int level = 1;
  int genus = 0;
  std::string weights;
  int digits = 0;
  bool closed_form = false;
  std::string name;
  int depth = 3;
  std::string correlator_case;
  std::string script;
  int markings = 0;
  int criterion = 0;
  bool verbose = false;
};

void cmd_root_system(const Options& o, Output& out)
{
  const RootDatum& d = algebra_arg(o.algebra);
  Json j;
  j["algebra"] = d.algebra.name();
  j["rank"] = d.rank();
  j["dimension"] = d.dimension();
  j["dual_coxeter"] = dual_coxeter(d);
  j["cartan"] = d.cartan;
  j["symmetrizer"] = Json::array();
  for (const Rational& s : d.symmetrizer) j["symmetrizer"].push_back(rat(s));
  j["comarks"] = d.comarks;
  j["highest_root"] = d.highest_root;
  j["highest_root_labels"] = d.highest_root_labels;
  j["positive_roots"] = d.positive_roots.size();
  j["weyl_group_order"] = big(weyl_group_order(d));
  j["fundamental_dimensions"] = Json::array();
  for (int i = 1; i <= d.rank(); ++i) j["fundamental_dimensions"].push_back(big(weyl_dimension(d, d.fundamental(i))));
  out.json = j;
  out.text << d.algebra.name() << ": rank " << d.rank() << ", dim " << d.dimension() << ", h_vee " << dual_coxeter(d)
           << ", |W| " << to_string(weyl_group_order(d)) << "\n";
  out.text << "cartan (Bourbaki order):\n";
  for (const auto& row : d.cartan) out.text << "  " << labels_to_string(row) << "\n";
  out.text << "highest root " << labels_to_string(d.highest_root) << " = " << labels_to_string(d.highest_root_labels)
           << " in Dynkin labels, comarks " << labels_to_string(d.comarks) << "\n";
}

void cmd_fusion(const Options& o, Output& out)
{
  const RootDatum& d = algebra_arg(o.algebra);
  if (o.level < 1) throw UsageError("--level must be >= 1");
  const FusionRing& r = cached_fusion_ring(d.algebra, o.level);
  Json j;
  j["algebra"] = d.algebra.name();
  j["level"] = o.level;
  j["basis"] = Json::array();
  for (const Weight& w : r.basis) j["basis"].push_back(w.labels);
  j["dual"] = r.dual;
  j["products"] = Json::array();
  out.text << d.algebra.name() << " level " << o.level << ", " << r.size() << " integrable weights\n";
  for (int a = 0; a < r.size(); ++a)
    for (int b = a; b < r.size(); ++b) {
      Json terms = Json::array();
      std::string line;
      for (int c = 0; c < r.size(); ++c) {
        const std::int64_t n = r.table[a][b][c];
        if (!n) continue;
        terms.push_back(Json{{"weight", r.basis[c].labels}, {"multiplicity", n}});
        line += (line.empty() ? "" : " + ") + (n > 1 ? std::to_string(n) + "*" : std::string()) + r.basis[c].to_string();
      }
      j["products"].push_back(Json{{"left", r.basis[a].labels}, {"right", r.basis[b].labels}, {"result", terms}});
      out.text << r.basis[a].to_string() << " x " << r.basis[b].to_string() << " = " << (line.empty() ? "0" : line)
               << "\n";
    }
  j["axioms"] = [&] {
    const FusionAxioms ax = check_fusion_axioms(r);
    return Json{{"commutative", ax.commutative}, {"unit", ax.unit}, {"associative", ax.associative}, {"duality", ax.duality}};
  }();
  out.json = j;
}

void cmd_verlinde(const Options& o, Output& out)
{
  const RootDatum& d = algebra_arg(o.algebra);
  if (o.level < 1) throw UsageError("--level must be >= 1");
  if (o.genus < 0) throw UsageError("--genus must be >= 0");
  CurveData c{o.genus, {}};
  for (const auto& labels : parse_weight_list(o.weights)) c.insertions.push_back(weight_arg(d, labels));
  const FusionRing& r = cached_fusion_ring(d.algebra, o.level);
  for (const Weight& w : c.insertions) r.index_of(w);  // throws if not integrable
  const BigInt dim = verlinde_dim(r, c);
  Json j;
  j["algebra"] = d.algebra.name();
  j["level"] = o.level;
  j["genus"] = o.genus;
  j["insertions"] = Json::array();
  for (const Weight& w : c.insertions) j["insertions"].push_back(w.labels);
  j["dimension"] = big(dim);
  out.text << "dim = " << to_string(dim) << "\n";
  if (o.closed_form) {
    const int n = static_cast<int>(c.insertions.size());
    const QSqrt5 f = closed_form_F(o.genus, n);
    j["closed_form"] = qsqrt5_json(f);
    out.text << "F(" << o.genus << "," << n << ") = " << f.to_string() << "\n";
  }
  out.json = j;
}

void cmd_s_matrix(const Options& o, Output& out)
{
  const RootDatum& d = algebra_arg(o.algebra);
  if (o.level < 1) throw UsageError("--level must be >= 1");
  const int digits = o.digits > 0 ? o.digits : default_precision_digits();
  if (digits < 10 || digits > 2000) throw UsageError("--digits must be in 10..2000");
  PrecisionScope scope(digits);
  Json j;
  j["algebra"] = d.algebra.name();
  j["level"] = o.level;
  j["digits"] = digits;
  const int shown = std::min(digits, 30);
  std::vector<Real> row;
  try {
    const SMatrix s = s_matrix(d, o.level, digits);
    j["basis"] = Json::array();
    for (const Weight& w : s.basis) j["basis"].push_back(w.labels);
    j["s"] = Json::array();
    for (const auto& r : s.s) {
      Json jr = Json::array();
      for (const Complex& z : r) jr.push_back(Json{{"re", real_str(z.re, shown)}, {"im", real_str(z.im, shown)}});
      j["s"].push_back(jr);
    }
    j["unitarity_residual"] = real_str(unitarity_residual(s), 3);
    j["symmetry_residual"] = real_str(symmetry_residual(s), 3);
    const VerlindeFusion vf = verlinde_formula_fusion(s);
    j["verlinde_matches_kac_walton"] = vf.table == cached_fusion_ring(d.algebra, o.level).table;
    j["max_rounding_error"] = real_str(vf.max_rounding_error, 3);
    for (const Complex& z : s.s[0]) row.push_back(z.re);
    out.text << s.basis.size() << "x" << s.basis.size() << " S-matrix, unitarity residual "
             << real_str(unitarity_residual(s), 3) << "\n";
    for (std::size_t a = 0; a < s.basis.size(); ++a) {
      out.text << s.basis[a].to_string() << ":";
      for (const Complex& z : s.s[a]) out.text << "  " << real_str(z.re, 8) << (z.im < 0 ? "-" : "+") << real_str(abs(z.im), 8) << "i";
      out.text << "\n";
    }
  } catch (const std::invalid_argument&) {
    // Weyl group too large for the full matrix: vacuum row only
    row = s_matrix_vacuum_row(d, o.level, digits);
    j["basis"] = Json::array();
    for (const Weight& w : level_weights(d, o.level)) j["basis"].push_back(w.labels);
    j["note"] = "full matrix skipped, Weyl group too large; vacuum row from the product formula";
    out.text << "vacuum row only (Weyl group too large)\n";
  }
  j["vacuum_row"] = Json::array();
  j["quantum_dimensions"] = Json::array();
  for (const Real& x : row) {
    j["vacuum_row"].push_back(real_str(x, shown));
    j["quantum_dimensions"].push_back(real_str(x / row[0], shown));
  }
  out.text << "S_0a:";
  for (const Real& x : row) out.text << " " << real_str(x, 12);
  out.text << "\n";
  out.json = j;
}

Json embedding_json(const EmbeddingData& e, bool& pass, std::ostream& text)
{
  Json j;
  j["name"] = e.name;
  j["ambient"] = e.ambient_label;
  j["factors"] = Json::array();
  for (const EmbeddingFactor& f : e.factors)
    j["factors"].push_back(Json{{"label", f.label}, {"algebra", f.algebra.name()}, {"dynkin_index", f.dynkin_index}});

  const AnomalyReport an = anomaly_report(e);
  Json ja;
  ja["factor_anomalies"] = Json::array();
  for (const Rational& c : an.factor_anomalies) ja["factor_anomalies"].push_back(rat(c));
  ja["factor_sum"] = rat(an.factor_sum);
  ja["ambient"] = rat(an.ambient_anomaly);
  ja["pass"] = an.conformal;

  const IndexCheckReport ix = embedding_index_check(e);
  Json ji;
  if (!ix.note.empty()) {
    ji["status"] = "skipped";
    ji["note"] = ix.note;
  } else {
    ji["branching_dimension"] = big(ix.branching_dimension);
    ji["ambient_dimension"] = big(ix.ambient_dimension);
    ji["dimension_ok"] = ix.dimension_ok;
    ji["rows"] = Json::array();
    for (const IndexCheckRow& r : ix.rows)
      ji["rows"].push_back(Json{{"factor", r.factor}, {"sum", rat(r.branching_sum)}, {"expected", rat(r.expected)}, {"pass", r.pass}});
    ji["pass"] = ix.pass;
  }

  const RankReport rk = rank_deficiency_check(e);
  Json jr{{"factor_rank_sum", rk.factor_rank_sum}, {"ambient_rank", rk.ambient_rank}, {"deficiency", rk.deficiency},
          {"strictly_smaller", rk.strictly_smaller}};

  pass = an.conformal && (ix.note.empty() ? ix.pass : true);
  j["criteria"] = Json{{"conformal_anomaly", ja}, {"dynkin_index", ji}, {"rank", jr}};
  j["pass"] = pass;

  text << e.name << ": " << (pass ? "PASS" : "FAIL") << "\n";
  text << "  anomaly " << to_string(an.factor_sum) << " vs " << to_string(an.ambient_anomaly) << (an.conformal ? " ok" : " FAIL")
       << "\n";
  if (ix.note.empty())
    for (const IndexCheckRow& r : ix.rows)
      text << "  index sum " << r.factor << ": " << to_string(r.branching_sum) << " vs " << to_string(r.expected)
           << (r.pass ? " ok" : " FAIL") << "\n";
  else
    text << "  index sum skipped: " << ix.note << "\n";
  text << "  rank " << rk.factor_rank_sum << " / " << rk.ambient_rank << ", deficiency " << rk.deficiency << "\n";
  return j;
}

void cmd_embedding_check(const Options& o, Output& out)
{
  EmbeddingData e;
  try {
    e = embedding_by_name(o.name);
  } catch (const std::invalid_argument& ex) {
    throw UsageError(ex.what());
  }
  bool pass = false;
  out.json = embedding_json(e, pass, out.text);
  out.status = pass ? kExitOk : kExitVerificationFailed;
}

void cmd_embedding_list(const Options&, Output& out)
{
  Json list = Json::array();
  bool all = true;
  for (const EmbeddingData& e : known_embeddings()) {
    bool pass = false;
    std::ostringstream ignored;
    Json j = embedding_json(e, pass, ignored);
    list.push_back(Json{{"name", e.name}, {"conformal", j["criteria"]["conformal_anomaly"]["pass"]}, {"pass", pass}});
    out.text << (pass ? "PASS " : "FAIL ") << e.name << "\n";
    all = all && pass;
  }
  out.json = Json{{"embeddings", list}, {"pass", all}};
  out.status = all ? kExitOk : kExitVerificationFailed;
}

void cmd_branch_verify(const Options& o, Output& out)
{
  if (o.depth < 0 || o.depth > 8) throw UsageError("--depth must be in 0..8");
  const BranchingClaim c = e8_g2_f4_claim();
  const BranchingReport rep = verify_branching(c, o.depth);
  Json rows = Json::array();
  for (const BranchingRow& r : rep.rows) {
    rows.push_back(Json{{"depth", r.depth}, {"left", big(r.ambient)}, {"right", big(r.summed)}, {"pass", r.pass}});
    out.text << "depth " << r.depth << ": " << to_string(r.ambient) << " = " << to_string(r.summed) << (r.pass ? "" : "  FAIL")
             << "\n";
  }
  Json summands = Json::array();
  for (const BranchingSummand& s : c.summands)
    summands.push_back(Json{{"g2", s.left.labels}, {"f4", s.right.labels}, {"depth_offset", s.depth_offset}});
  out.json = Json{{"ambient", "E8 level 1 vacuum"}, {"summands", summands}, {"rows", rows}, {"problems", rep.problems}, {"pass", rep.pass}};
  for (const std::string& p : rep.problems) out.text << "problem: " << p << "\n";
  out.status = rep.pass ? kExitOk : kExitVerificationFailed;
}

Json polynomial_json(const Polynomial& p)
{
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json powers = Json::object();
    for (int i = 0; i < kSymbolCount; ++i)
      if (m[i]) powers[std::string(symbol_name(static_cast<Symbol>(i)))] = m[i];
    terms.push_back(Json{{"coeff", rat(c)}, {"powers", powers}});
  }
  return Json{{"text", p.to_string()}, {"terms", terms}};
}

void cmd_correlator(const Options& o, Output& out)
{
  if (o.correlator_case.empty() == o.script.empty()) throw UsageError("give exactly one of --case and --script");
  CorrelatorScript sc;
  std::string label;
  if (!o.script.empty()) {
    std::ifstream in(o.script);
    if (!in) throw UsageError("cannot read script '" + o.script + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      sc = parse_correlator_script(buf.str());
    } catch (const std::invalid_argument& e) {
      throw UsageError(o.script + ": " + e.what());
    }
    label = o.script;
  } else {
    try {
      const CorrelatorCase c = parse_case(o.correlator_case);
      sc.state = correlator_case(c);
      label = "case " + o.correlator_case;
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    sc.env.level = o.level;
  }
  if (sc.env.level < 1) throw UsageError("--level must be >= 1");
  ReduceResult r;
  try {
    r = reduce(sc.state, sc.env);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Json j;
  j["input"] = label;
  j["state"] = sc.state.to_string();
  j["level"] = sc.env.level;
  j["ok"] = r.ok;
  j["steps"] = r.steps;
  if (r.ok) {
    j["value"] = polynomial_json(r.value);
    if (!sc.env.values.empty()) {
      Json subs = Json::object();
      for (const auto& [s, v] : sc.env.values) subs[std::string(symbol_name(s))] = rat(v);
      j["substitutions"] = subs;
      j["substituted"] = polynomial_json(r.substituted);
    }
    out.text << label << ": " << r.value.to_string();
    if (!sc.env.values.empty()) out.text << "  ->  " << r.substituted.to_string();
    out.text << "  (" << r.steps << " steps)\n";
  } else {
    j["diagnostic"] = r.diagnostic;
    out.text << label << ": no result, " << r.diagnostic << "\n";
    out.status = kExitVerificationFailed;
  }
  out.json = j;
}

void cmd_pic_relation(const Options& o, Output& out)
{
  PicRelation r;
  try {
    r = emit_relation(o.genus, o.markings);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Json boundary = Json::array();
  Rational irr = 0;
  for (const auto& [b, c] : r.boundary) {
    if (b.irreducible) {
      irr = c;
      continue;
    }
    boundary.push_back(Json{{"h", b.h}, {"A", b.A}, {"coeff", rat(c)}});
  }
  Json psi = Json::array();
  for (const Rational& c : r.psi_coeffs) psi.push_back(big(numerator_of(c)));
  Json j;
  j["g"] = r.g;
  j["n"] = r.n;
  j["F"] = big(r.F);
  j["lhs"] = Json{{"lambda", big(numerator_of(r.hodge_coeff))}, {"psi", psi}};
  j["rhs"] = Json{{"g2_block", rat(r.g2_block_coeff)},
                  {"f4_block", big(numerator_of(r.f4_block_coeff))},
                  {"irr", rat(irr)},
                  {"boundary", boundary}};
  if (r.g >= 1) {
    const ConsistencyReport rep = relation_consistency(r.g, r.n);
    j["consistency"] = Json{{"recursion", rep.recursion_ok}, {"numerators", rep.numerators_ok}, {"problems", rep.problems}};
    if (!rep.pass()) out.status = kExitVerificationFailed;
  }
  out.json = j;

  out.text << "4 lambda";
  for (int i = 1; i <= r.n; ++i) out.text << " + psi_" << i;
  out.text << " = " << to_string(r.g2_block_coeff) << " c1(V_g2) + c1(V_f4)";
  for (const auto& [b, c] : r.boundary)
    out.text << " + " << to_string(c) << " delta_" << (b.irreducible ? std::string("irr") : b.to_string());
  out.text << "\n";
}

void cmd_verify_all(const Options& o, Output& out)
{
  std::vector<CriterionResult> results;
  if (o.criterion) {
    if (o.criterion < 1 || o.criterion > kCriterionCount) throw UsageError("--criterion must be 1.." + std::to_string(kCriterionCount));
    results.push_back(run_criterion(o.criterion));
  } else {
    results = run_all_criteria();
  }
  Json list = Json::array();
  bool all = true;
  for (const CriterionResult& r : results) {
    list.push_back(Json{{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"checks", r.details}});
    out.text << "criterion " << r.id << " " << (r.pass ? "PASS" : "FAIL") << "  " << r.title << "\n";
    for (const std::string& line : r.details)
      if (o.verbose || line.rfind("FAIL", 0) == 0) out.text << "    " << line << "\n";
    all = all && r.pass;
  }
  out.json = Json{{"criteria", list}, {"pass", all}};
  out.status = all ? kExitOk : kExitVerificationFailed;
}

}  // namespace

std::vector<std::vector<int>> parse_weight_list(const std::string& text)
{
  std::vector<std::vector<int>> out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == ',' || text[i] == '\t')) ++i;
  };
  skip();
  while (i < text.size()) {
    if (text[i] != '[') throw std::invalid_argument("expected '[' in weight list '" + text + "'");
    const std::size_t close = text.find(']', i);
    if (close == std::string::npos) throw std::invalid_argument("unterminated weight in '" + text + "'");
    const Labels labels = parse_labels(text.substr(i, close - i + 1));
    i = close + 1;
    int count = 1;
    if (i < text.size() && (text[i] == 'x' || text[i] == '*')) {
      ++i;
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i || j - i > 4) throw std::invalid_argument("bad multiplicity in weight list '" + text + "'");
      count = std::stoi(text.substr(i, j - i));
      i = j;
    }
    for (int k = 0; k < count; ++k) out.push_back(labels);
    skip();
  }
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"sdual: level-one G2/F4/E8 conformal blocks and related checks", "sdual"};
  app.require_subcommand(1);
  Options o;

  auto add_json = [&](CLI::App* s) { s->add_flag("--json", o.json, "emit one JSON document"); };
  auto add_alg = [&](CLI::App* s) {
    s->add_option("--algebra", o.algebra, "algebra, e.g. G2, F4, E8, A3")->capture_default_str();
  };
  auto add_level = [&](CLI::App* s) {
    s->add_option("--level", o.level, "level")->capture_default_str()->check(CLI::Range(1, 1000));
  };

  CLI::App* root = app.add_subcommand("root-system", "Cartan matrix and root data (Bourbaki order)");
  add_alg(root);
  add_json(root);

  CLI::App* fusion = app.add_subcommand("fusion", "fusion ring via Kac-Walton");
  add_alg(fusion);
  add_level(fusion);
  add_json(fusion);

  CLI::App* verl = app.add_subcommand("verlinde", "conformal block dimension");
  add_alg(verl);
  add_level(verl);
  verl->add_option("--genus", o.genus, "genus")->capture_default_str()->check(CLI::Range(0, 200));
  verl->add_option("--weights", o.weights, "insertions, e.g. [1,0]x4");
  verl->add_flag("--closed-form", o.closed_form, "also print F(g,n) in Q(sqrt5) as {a, b}");
  add_json(verl);

  CLI::App* smat = app.add_subcommand("s-matrix", "numeric modular S-matrix (precision from SDUAL_PRECISION)");
  add_alg(smat);
  add_level(smat);
  smat->add_option("--digits", o.digits, "decimal digits (overrides SDUAL_PRECISION)");
  add_json(smat);

  CLI::App* emb = app.add_subcommand("embedding", "conformal embedding checks");
  emb->require_subcommand(1);
  CLI::App* emb_check = emb->add_subcommand("check", "check one embedding");
  emb_check->add_option("--name", o.name, "e.g. g2xf4-in-e8, sl2xsl3-in-sl6")->required();
  add_json(emb_check);
  CLI::App* emb_list = emb->add_subcommand("list", "check every known embedding");
  add_json(emb_list);
  add_json(emb);

  CLI::App* branch = app.add_subcommand("branch-verify", "E8 level 1 vacuum = sum of G2 x F4 level 1 characters");
  branch->add_option("--depth", o.depth, "highest grade checked")->capture_default_str();
  add_json(branch);

  CLI::App* corr = app.add_subcommand("correlator", "three-point gauge reductions");
  corr->add_option("--case", o.correlator_case, "I, II or III");
  corr->add_option("--script", o.script, "file in the term language");
  corr->add_option("--level", o.level, "level for --case")->capture_default_str()->check(CLI::Range(1, 1000));
  add_json(corr);

  CLI::App* pic = app.add_subcommand("pic-relation", "divisor relation on the moduli of pointed curves");
  pic->add_option("--genus", o.genus, "genus")->required()->check(CLI::Range(0, 60));
  pic->add_option("--markings", o.markings, "number of markings")->required()->check(CLI::Range(0, 20));
  add_json(pic);

  CLI::App* ver = app.add_subcommand("verify-all", "run the acceptance criteria");
  ver->add_option("--criterion", o.criterion, "run only this criterion");
  ver->add_flag("-v,--verbose", o.verbose, "print every check");
  add_json(ver);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\nrun with --help for usage\n";
    return kExitUsage;
  }

  Output result;
  try {
    if (root->parsed()) cmd_root_system(o, result);
    else if (fusion->parsed()) cmd_fusion(o, result);
    else if (verl->parsed()) cmd_verlinde(o, result);
    else if (smat->parsed()) cmd_s_matrix(o, result);
    else if (emb_check->parsed()) cmd_embedding_check(o, result);
    else if (emb_list->parsed()) cmd_embedding_list(o, result);
    else if (branch->parsed()) cmd_branch_verify(o, result);
    else if (corr->parsed()) cmd_correlator(o, result);
    else if (pic->parsed()) cmd_pic_relation(o, result);
    else if (ver->parsed()) cmd_verify_all(o, result);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
  if (o.json)
    out << result.json.dump(2) << "\n";
  else
    out << result.text.str();
  return result.status;
}

}  // namespace sdual
