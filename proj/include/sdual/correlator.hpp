#pragma once

#include "sdual/polynomial.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

// Three-point level-l vacuum correlators on P^1 with marked points
//   slot 1 at z = 1 (xi = z - 1), slot 2 at z = infinity (xi = 1/z), slot 3 at z = 0 (xi = z).
//
// Generators: X_{+a}, X_{-a}, X_{+b}, X_{-b}, a Cartan element H and the Cartan elements
// t_a, t_b dual to the roots a, b, so that [X_c, X_{-c}] = <X_c, X_{-c}> t_c.
// Roots have (a, a) = (b, b) = 2. Affine bracket:
//   [x(m), y(n)] = [x, y](m + n) + m delta_{m+n,0} (x, y) level
// which is the residue convention Res_{t=0} g df for f = t^m, g = t^n.
namespace sdual {

enum class OpKind { XPlusA, XMinusA, XPlusB, XMinusB, H, TA, TB };

struct ModeOp {
  OpKind kind = OpKind::H;
  int mode = 0;

  std::string to_string() const;  // "X+a(-1)", "H(0)", "Ta(2)"
  auto operator<=>(const ModeOp&) const = default;
};

/// Parses "X+a(-1)", "X-b(0)", "H(-2)", "Ta(1)", "Tb(0)".
ModeOp parse_mode_op(const std::string& text);

struct PairingEnv {
  int level = 1;
  std::map<Symbol, Rational> values;  // substituted into the final scalar
};

/// [a(m), b(n)] = coefficient * op + central, with central already multiplied by the level.
struct BracketResult {
  std::optional<std::pair<Polynomial, ModeOp>> op;
  Polynomial central;
};

/// Throws std::invalid_argument for two distinct, non-opposite root vectors.
BracketResult apply_bracket(const ModeOp& a, const ModeOp& b, const PairingEnv& env);

/// ops[0] ops[1] ... ops[k-1] |0>, rightmost acting first.
using Word = std::vector<ModeOp>;
using Slots = std::array<Word, 3>;

struct CorrelatorState {
  std::map<Slots, Polynomial> terms;

  static CorrelatorState single(const Slots& slots, Polynomial coeff = Polynomial(1));
  bool is_scalar() const;  // only the all-vacuum term remains
  std::string to_string() const;
};

/// Kills words ending in a nonnegative mode and moves annihilators right through
/// each word until every operator has negative mode.
CorrelatorState annihilate_vacuum(const CorrelatorState& s, const PairingEnv& env);

/// Gauge symmetry with the leading operator Y(m), m < 0, of slot `which` (0-based) and
///   f = (z-1)^m (slot 1), z^{-m} (slot 2), z^m (slot 3),
/// each of which is regular away from the marked points and equals xi^m at its own point.
/// Every term of s must have Y(m) leading in that slot and be normal ordered.
CorrelatorState gauge_move(const CorrelatorState& s, int which, const PairingEnv& env);

struct ReduceResult {
  bool ok = false;
  Polynomial value;       // symbolic, before env.values substitution
  Polynomial substituted;  // with env.values applied
  long steps = 0;
  std::string diagnostic;
};

struct ReduceOptions {
  long step_budget = 200000;
};

/// Normal orders, then gauge-moves the highest nonempty slot of each term until only
/// vacua remain; the scalar multiplies <Psi|0 (x) 0 (x) 0>, normalized to 1.
ReduceResult reduce(const CorrelatorState& s, const PairingEnv& env, const ReduceOptions& opt = {});

struct ConfluenceReport {
  bool confluent = false;
  std::size_t states_explored = 0;
  std::vector<Polynomial> values;  // distinct results found
};

/// Tries every choice of slot at every gauge move (memoized on normal-ordered single terms).
ConfluenceReport confluence_check(const CorrelatorState& s, const PairingEnv& env, std::size_t state_limit = 200000);

enum class CorrelatorCase { I, II, III };

/// I:   (|0>, |0>, |0>)
/// II:  (|0>, X_a(-1)|0>, X_-a(-1)|0>)
/// III: (H(-1)|0>, X_b(-1)|0>, X_-b(-1)|0>)
CorrelatorState correlator_case(CorrelatorCase c);
CorrelatorCase parse_case(const std::string& text);

struct CorrelatorScript {
  PairingEnv env;
  CorrelatorState state;
};

/// Line-based term language:
///   # comment
///   level 1
///   set pa = 1/2
///   slot1: H(-1)
///   slot2: X+b(-1) * X-a(-2)
///   slot3:
/// Missing slots are vacua. Throws std::invalid_argument with the line number on errors.
CorrelatorScript parse_correlator_script(const std::string& text);

}  // namespace sdual
