#include "sdual/correlator.hpp"

#include <algorithm>
#include <regex>
#include <stdexcept>

namespace sdual {

namespace {

bool is_root(OpKind k) { return k == OpKind::XPlusA || k == OpKind::XMinusA || k == OpKind::XPlusB || k == OpKind::XMinusB; }
bool root_is_a(OpKind k) { return k == OpKind::XPlusA || k == OpKind::XMinusA; }
int root_sign(OpKind k) { return k == OpKind::XPlusA || k == OpKind::XPlusB ? 1 : -1; }

Polynomial sym(Symbol s) { return Polynomial::symbol(s); }

// <c, x> for a root c (a or b) and a Cartan element x
Polynomial root_on_cartan(bool c_is_a, OpKind x)
{
  switch (x) {
  case OpKind::H: return sym(c_is_a ? Symbol::aH : Symbol::bH);
  case OpKind::TA: return c_is_a ? Polynomial(2) : sym(Symbol::ab);
  case OpKind::TB: return c_is_a ? sym(Symbol::ab) : Polynomial(2);
  default: throw std::logic_error("not a Cartan element");
  }
}

// invariant form on the Cartan generators
Polynomial cartan_form(OpKind x, OpKind y)
{
  if (x == OpKind::H && y == OpKind::H) return sym(Symbol::hh);
  if (x == OpKind::H) return root_on_cartan(y == OpKind::TA, OpKind::H);
  if (y == OpKind::H) return root_on_cartan(x == OpKind::TA, OpKind::H);
  return root_on_cartan(x == OpKind::TA, y);
}

const char* kind_name(OpKind k)
{
  switch (k) {
  case OpKind::XPlusA: return "X+a";
  case OpKind::XMinusA: return "X-a";
  case OpKind::XPlusB: return "X+b";
  case OpKind::XMinusB: return "X-b";
  case OpKind::H: return "H";
  case OpKind::TA: return "Ta";
  case OpKind::TB: return "Tb";
  }
  return "?";
}

std::string word_to_string(const Word& w)
{
  std::string out;
  for (const ModeOp& op : w) out += op.to_string() + " ";
  return out + "|0>";
}

Rational binomial(int m, int j)  // generalized, any integer m, j >= 0
{
  Rational r = 1;
  for (int i = 0; i < j; ++i) r = r * (m - i) / (i + 1);
  return r;
}

int depth_of(const Word& w)
{
  int d = 0;
  for (const ModeOp& op : w) d -= op.mode;
  return d;
}

using WordMemo = std::map<Word, std::map<Word, Polynomial>>;

struct Engine {
  const PairingEnv& env;
  long steps = 0;
  long budget = -1;
  WordMemo memo;

  explicit Engine(const PairingEnv& e) : env(e) {}

  void tick()
  {
    ++steps;
    if (budget >= 0 && steps > budget) throw std::runtime_error("step budget exhausted");
  }

  const std::map<Word, Polynomial>& normal_order(const Word& w)
  {
    if (auto it = memo.find(w); it != memo.end()) return it->second;
    std::map<Word, Polynomial> out;
    int i = static_cast<int>(w.size()) - 1;
    while (i >= 0 && w[i].mode < 0) --i;
    if (i < 0) {
      out.emplace(w, Polynomial(1));
    } else if (i + 1 < static_cast<int>(w.size())) {
      tick();
      auto add = [&](const Word& v, const Polynomial& c) {
        for (const auto& [u, k] : normal_order(v)) {
          Polynomial& slot = out[u];
          slot += c * k;
          if (slot.is_zero()) out.erase(u);
        }
      };
      Word swapped = w;
      std::swap(swapped[i], swapped[i + 1]);
      add(swapped, Polynomial(1));
      const BracketResult br = apply_bracket(w[i], w[i + 1], env);
      Word shorter(w.begin(), w.begin() + i);
      Word tail(w.begin() + i + 2, w.end());
      if (!br.central.is_zero()) {
        Word v = shorter;
        v.insert(v.end(), tail.begin(), tail.end());
        add(v, br.central);
      }
      if (br.op) {
        Word v = shorter;
        v.push_back(br.op->second);
        v.insert(v.end(), tail.begin(), tail.end());
        add(v, br.op->first);
      }
    }
    return memo.emplace(w, std::move(out)).first->second;
  }

  CorrelatorState normal_order(const CorrelatorState& s)
  {
    CorrelatorState out;
    for (const auto& [slots, c] : s.terms) {
      std::map<Slots, Polynomial> partial{{Slots{}, c}};
      for (int k = 0; k < 3; ++k) {
        std::map<Slots, Polynomial> next;
        for (const auto& [ps, pc] : partial)
          for (const auto& [w, wc] : normal_order(slots[k])) {
            Slots ns = ps;
            ns[k] = w;
            next[ns] += pc * wc;
          }
        partial = std::move(next);
      }
      for (const auto& [ps, pc] : partial) out.terms[ps] += pc;
    }
    std::erase_if(out.terms, [](const auto& t) { return t.second.is_zero(); });
    return out;
  }

  // f expanded at slot `to` when the gauge function is centred at slot `from`: (mode, coefficient)
  static std::vector<std::pair<int, Rational>> expansion(int from, int to, int m, int max_mode)
  {
    std::vector<std::pair<int, Rational>> out;
    auto push = [&](int mode, Rational c) {
      if (mode <= max_mode && c != 0) out.emplace_back(mode, std::move(c));
    };
    if (from == 0 && to == 1) {
      // (1/xi - 1)^m = xi^{-m} (1 - xi)^m
      for (int j = 0; j - m <= max_mode; ++j) push(j - m, binomial(m, j) * (j % 2 ? -1 : 1));
    } else if (from == 0 && to == 2) {
      // (z - 1)^m = (-1)^m (1 - z)^m
      for (int j = 0; j <= max_mode; ++j) push(j, binomial(m, j) * ((m + j) % 2 ? -1 : 1));
    } else if (from == 1 && to == 0) {
      // z^{-m} = (1 + xi)^{-m}
      for (int j = 0; j <= -m; ++j) push(j, binomial(-m, j));
    } else if (from == 1 && to == 2) {
      push(-m, 1);
    } else if (from == 2 && to == 0) {
      // z^m = (1 + xi)^m
      for (int j = 0; j <= max_mode; ++j) push(j, binomial(m, j));
    } else if (from == 2 && to == 1) {
      // z^m = xi^{-m}
      push(-m, 1);
    }
    return out;
  }

  CorrelatorState gauge(const CorrelatorState& s, int which)
  {
    CorrelatorState raw;
    for (const auto& [slots, c] : s.terms) {
      if (slots[which].empty()) throw std::invalid_argument("gauge move on an empty slot");
      const ModeOp y = slots[which].front();
      if (y.mode >= 0) throw std::invalid_argument("gauge move needs a creation operator in front");
      tick();
      Slots rest = slots;
      rest[which].erase(rest[which].begin());
      for (int j = 0; j < 3; ++j) {
        if (j == which) continue;
        for (const auto& [mode, coeff] : expansion(which, j, y.mode, depth_of(slots[j]))) {
          Slots ns = rest;
          ns[j].insert(ns[j].begin(), ModeOp{y.kind, mode});
          raw.terms[ns] -= c * Polynomial(coeff);
        }
      }
    }
    std::erase_if(raw.terms, [](const auto& t) { return t.second.is_zero(); });
    return normal_order(raw);
  }
};

bool all_empty(const Slots& s) { return s[0].empty() && s[1].empty() && s[2].empty(); }

}  // namespace

std::string ModeOp::to_string() const { return std::string(kind_name(kind)) + "(" + std::to_string(mode) + ")"; }

ModeOp parse_mode_op(const std::string& text)
{
  static const std::regex re(R"(^(X\+a|X-a|X\+b|X-b|H|Ta|Tb)\((-?\d{1,6})\)$)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw std::invalid_argument("malformed operator '" + text + "'");
  static const std::map<std::string, OpKind> kinds{{"X+a", OpKind::XPlusA}, {"X-a", OpKind::XMinusA},
                                                   {"X+b", OpKind::XPlusB}, {"X-b", OpKind::XMinusB},
                                                   {"H", OpKind::H},        {"Ta", OpKind::TA},
                                                   {"Tb", OpKind::TB}};
  return ModeOp{kinds.at(m[1]), std::stoi(m[2])};
}

BracketResult apply_bracket(const ModeOp& a, const ModeOp& b, const PairingEnv& env)
{
  BracketResult r;
  const int mode = a.mode + b.mode;
  const bool central = mode == 0 && a.mode != 0;
  if (is_root(a.kind) && is_root(b.kind)) {
    if (root_is_a(a.kind) != root_is_a(b.kind))
      throw std::invalid_argument("bracket [" + a.to_string() + ", " + b.to_string() + "] is outside the engine's symbol set");
    if (a.kind == b.kind) return r;
    const bool is_a = root_is_a(a.kind);
    const Polynomial p = sym(is_a ? Symbol::pa : Symbol::pb);
    r.op = std::pair{p * Polynomial(root_sign(a.kind)), ModeOp{is_a ? OpKind::TA : OpKind::TB, mode}};
    if (central) r.central = p * Polynomial(a.mode) * Polynomial(env.level);
    return r;
  }
  if (!is_root(a.kind) && is_root(b.kind)) {
    r.op = std::pair{root_on_cartan(root_is_a(b.kind), a.kind) * Polynomial(root_sign(b.kind)), ModeOp{b.kind, mode}};
    return r;
  }
  if (is_root(a.kind) && !is_root(b.kind)) {
    r.op = std::pair{root_on_cartan(root_is_a(a.kind), b.kind) * Polynomial(-root_sign(a.kind)), ModeOp{a.kind, mode}};
    return r;
  }
  if (central) r.central = cartan_form(a.kind, b.kind) * Polynomial(a.mode) * Polynomial(env.level);
  return r;
}

CorrelatorState CorrelatorState::single(const Slots& slots, Polynomial coeff)
{
  CorrelatorState s;
  if (!coeff.is_zero()) s.terms.emplace(slots, std::move(coeff));
  return s;
}

bool CorrelatorState::is_scalar() const
{
  return terms.empty() || (terms.size() == 1 && all_empty(terms.begin()->first));
}

std::string CorrelatorState::to_string() const
{
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [slots, c] : terms) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ") <" + word_to_string(slots[0]) + ", " + word_to_string(slots[1]) + ", " +
           word_to_string(slots[2]) + ">";
  }
  return out;
}

CorrelatorState annihilate_vacuum(const CorrelatorState& s, const PairingEnv& env)
{
  Engine e{env};
  return e.normal_order(s);
}

CorrelatorState gauge_move(const CorrelatorState& s, int which, const PairingEnv& env)
{
  if (which < 0 || which > 2) throw std::invalid_argument("slot index must be 0, 1 or 2");
  Engine e{env};
  return e.gauge(s, which);
}

ReduceResult reduce(const CorrelatorState& s, const PairingEnv& env, const ReduceOptions& opt)
{
  ReduceResult res;
  Engine e{env};
  e.budget = opt.step_budget;
  try {
    CorrelatorState cur = e.normal_order(s);
    while (true) {
      auto it = std::find_if(cur.terms.begin(), cur.terms.end(), [](const auto& t) { return !all_empty(t.first); });
      if (it == cur.terms.end()) break;
      int which = 2;
      while (it->first[which].empty()) --which;
      const CorrelatorState moved = e.gauge(CorrelatorState::single(it->first, it->second), which);
      cur.terms.erase(it);
      for (const auto& [slots, c] : moved.terms) {
        Polynomial& t = cur.terms[slots];
        t += c;
        if (t.is_zero()) cur.terms.erase(slots);
      }
    }
    auto vac = cur.terms.find(Slots{});
    res.value = vac == cur.terms.end() ? Polynomial() : vac->second;
    res.ok = true;
  } catch (const std::runtime_error& ex) {
    res.diagnostic = std::string(ex.what()) + " after " + std::to_string(e.steps) + " steps";
  }
  res.steps = e.steps;
  res.substituted = res.value;
  for (const auto& [symbol, v] : env.values) res.substituted = res.substituted.substitute(symbol, v);
  return res;
}

namespace {

struct ConfluenceSearch {
  Engine engine;
  std::size_t limit;
  std::map<Slots, std::vector<Polynomial>> memo;
  bool split = false;

  static void add_distinct(std::vector<Polynomial>& v, const Polynomial& p)
  {
    if (std::find(v.begin(), v.end(), p) == v.end()) v.push_back(p);
  }

  const std::vector<Polynomial>& values(const Slots& slots)
  {
    if (auto it = memo.find(slots); it != memo.end()) return it->second;
    if (memo.size() >= limit) throw std::runtime_error("confluence search exceeded its state limit");
    std::vector<Polynomial> out;
    if (all_empty(slots)) {
      out.push_back(Polynomial(1));
    } else {
      for (int which = 0; which < 3; ++which) {
        if (slots[which].empty()) continue;
        const CorrelatorState moved = engine.gauge(CorrelatorState::single(slots), which);
        Polynomial total;
        for (const auto& [t, c] : moved.terms) {
          const std::vector<Polynomial>& sub = values(t);
          if (sub.size() > 1) split = true;
          total += c * sub.front();
        }
        add_distinct(out, total);
      }
    }
    if (out.size() > 1) split = true;
    return memo.emplace(slots, std::move(out)).first->second;
  }
};

}  // namespace

ConfluenceReport confluence_check(const CorrelatorState& s, const PairingEnv& env, std::size_t state_limit)
{
  ConfluenceSearch search{Engine{env}, state_limit, {}, false};
  const CorrelatorState start = search.engine.normal_order(s);
  ConfluenceReport rep;
  Polynomial total;
  for (const auto& [slots, c] : start.terms) {
    const std::vector<Polynomial>& v = search.values(slots);
    for (const Polynomial& p : v) ConfluenceSearch::add_distinct(rep.values, c * p);
    total += c * v.front();
  }
  if (start.terms.size() != 1 || rep.values.empty()) {
    rep.values.clear();
    rep.values.push_back(total);
  }
  rep.states_explored = search.memo.size();
  rep.confluent = !search.split;
  return rep;
}

CorrelatorState correlator_case(CorrelatorCase c)
{
  switch (c) {
  case CorrelatorCase::I: return CorrelatorState::single(Slots{});
  case CorrelatorCase::II:
    return CorrelatorState::single(Slots{Word{}, Word{{OpKind::XPlusA, -1}}, Word{{OpKind::XMinusA, -1}}});
  case CorrelatorCase::III:
    return CorrelatorState::single(
        Slots{Word{{OpKind::H, -1}}, Word{{OpKind::XPlusB, -1}}, Word{{OpKind::XMinusB, -1}}});
  }
  throw std::invalid_argument("unknown case");
}

CorrelatorCase parse_case(const std::string& text)
{
  if (text == "I" || text == "1") return CorrelatorCase::I;
  if (text == "II" || text == "2") return CorrelatorCase::II;
  if (text == "III" || text == "3") return CorrelatorCase::III;
  throw std::invalid_argument("unknown case '" + text + "' (expected I, II or III)");
}

}  // namespace sdual
