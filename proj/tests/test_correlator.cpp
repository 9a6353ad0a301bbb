#include "doctest.h"

#include "sdual/correlator.hpp"

using namespace sdual;

namespace {

Polynomial S(Symbol s) { return Polynomial::symbol(s); }

Polynomial value_of(const CorrelatorState& s, int level = 1)
{
  PairingEnv env;
  env.level = level;
  const ReduceResult r = reduce(s, env);
  REQUIRE_MESSAGE(r.ok, r.diagnostic);
  return r.value;
}

ModeOp op(const char* text) { return parse_mode_op(text); }

}  // namespace

TEST_CASE("operator parsing")
{
  CHECK(op("X+a(-1)") == ModeOp{OpKind::XPlusA, -1});
  CHECK(op("X-b(0)") == ModeOp{OpKind::XMinusB, 0});
  CHECK(op("H(-2)") == ModeOp{OpKind::H, -2});
  CHECK(op("Tb(3)").to_string() == "Tb(3)");
  CHECK_THROWS_AS(op("X+c(-1)"), std::invalid_argument);
  CHECK_THROWS_AS(op("H(-1"), std::invalid_argument);
}

TEST_CASE("brackets")
{
  PairingEnv env;
  env.level = 3;
  BracketResult r = apply_bracket(op("H(-1)"), op("H(1)"), env);
  CHECK_FALSE(r.op);
  CHECK(r.central == Polynomial(-3) * S(Symbol::hh));

  r = apply_bracket(op("X+a(2)"), op("X-a(-2)"), env);
  REQUIRE(r.op);
  CHECK(r.op->first == S(Symbol::pa));
  CHECK(r.op->second == op("Ta(0)"));
  CHECK(r.central == Polynomial(6) * S(Symbol::pa));

  r = apply_bracket(op("X-b(1)"), op("X+b(0)"), env);
  REQUIRE(r.op);
  CHECK(r.op->first == -S(Symbol::pb));
  CHECK(r.op->second == op("Tb(1)"));
  CHECK(r.central.is_zero());

  r = apply_bracket(op("H(0)"), op("X-b(-1)"), env);
  REQUIRE(r.op);
  CHECK(r.op->first == -S(Symbol::bH));
  r = apply_bracket(op("X+a(0)"), op("Tb(-1)"), env);
  REQUIRE(r.op);
  CHECK(r.op->first == -S(Symbol::ab));
  r = apply_bracket(op("Ta(1)"), op("X+a(-1)"), env);
  CHECK(r.op->first == Polynomial(2));

  r = apply_bracket(op("X+a(0)"), op("X+a(-1)"), env);
  CHECK_FALSE(r.op);
  CHECK(r.central.is_zero());

  CHECK_THROWS_AS(apply_bracket(op("X+a(0)"), op("X-b(-1)"), env), std::invalid_argument);
}

TEST_CASE("vacuum annihilation")
{
  PairingEnv env;
  // X_a(1) X_-a(-1)|0> = pa*level |0> + pa Ta(0)|0> = pa |0>
  const CorrelatorState s = annihilate_vacuum(
      CorrelatorState::single(Slots{Word{op("X+a(1)"), op("X-a(-1)")}, Word{}, Word{}}), env);
  CHECK(s.is_scalar());
  CHECK(s.terms.at(Slots{}) == S(Symbol::pa));
  const CorrelatorState z = annihilate_vacuum(CorrelatorState::single(Slots{Word{op("H(0)")}, Word{}, Word{}}), env);
  CHECK(z.terms.empty());
}

TEST_CASE("the three reference correlators")
{
  CHECK(value_of(correlator_case(CorrelatorCase::I)) == Polynomial(1));
  CHECK(value_of(correlator_case(CorrelatorCase::II)) == -S(Symbol::pa));
  CHECK(value_of(correlator_case(CorrelatorCase::III)) == S(Symbol::bH) * S(Symbol::pb));
  for (int level = 1; level <= 4; ++level) {
    CHECK(value_of(correlator_case(CorrelatorCase::II), level) == Polynomial(-level) * S(Symbol::pa));
    CHECK(value_of(correlator_case(CorrelatorCase::III), level) == Polynomial(level) * S(Symbol::bH) * S(Symbol::pb));
  }

  PairingEnv env;
  env.values[Symbol::bH] = 0;
  const ReduceResult r = reduce(correlator_case(CorrelatorCase::III), env);
  REQUIRE(r.ok);
  CHECK(r.substituted.is_zero());
  CHECK(r.value.divisible_by(Symbol::bH));
}

TEST_CASE("exchanging the two root insertions flips the sign")
{
  const Polynomial a = value_of(CorrelatorState::single(Slots{Word{op("X+a(-1)")}, Word{}, Word{op("X-a(-1)")}}));
  const Polynomial b = value_of(CorrelatorState::single(Slots{Word{op("X+a(-1)")}, Word{op("X-a(-1)")}, Word{}}));
  CHECK(a == S(Symbol::pa));
  CHECK(b == -S(Symbol::pa));
  CHECK(a == -b);
}

TEST_CASE("charge conservation")
{
  // total a-weight nonzero gives zero
  CHECK(value_of(CorrelatorState::single(Slots{Word{op("X+a(-1)")}, Word{op("X+a(-1)")}, Word{}})).is_zero());
  CHECK(value_of(CorrelatorState::single(Slots{Word{}, Word{op("X+b(-2)")}, Word{}})).is_zero());
  // a single Cartan insertion has zero one-point function
  CHECK(value_of(CorrelatorState::single(Slots{Word{op("H(-1)")}, Word{}, Word{}})).is_zero());
}

TEST_CASE("two-point functions of Cartan currents")
{
  // same sign as the X_a, X_-a pair at these two points
  for (int level = 1; level <= 3; ++level) {
    const Polynomial v =
        value_of(CorrelatorState::single(Slots{Word{}, Word{op("H(-1)")}, Word{op("H(-1)")}}), level);
    CHECK(v == Polynomial(-level) * S(Symbol::hh));
  }
}

TEST_CASE("confluence over every order of gauge moves")
{
  PairingEnv env;
  const std::vector<Slots> states{
      Slots{Word{}, Word{op("X+a(-1)")}, Word{op("X-a(-1)")}},
      Slots{Word{op("H(-1)")}, Word{op("X+b(-1)")}, Word{op("X-b(-1)")}},
      Slots{Word{op("X+a(-2)")}, Word{op("X-a(-1)")}, Word{op("H(-1)")}},
      Slots{Word{op("Ta(-1)"), op("H(-1)")}, Word{op("X+b(-1)")}, Word{op("X-b(-1)")}},
      Slots{Word{op("X+a(-1)"), op("X-a(-1)")}, Word{op("Tb(-2)")}, Word{op("H(-1)")}},
      Slots{Word{op("X-b(-2)")}, Word{op("X+b(-1)"), op("H(-1)")}, Word{}},
  };
  for (const Slots& sl : states) {
    const CorrelatorState s = CorrelatorState::single(sl);
    const ConfluenceReport rep = confluence_check(s, env);
    CHECK(rep.confluent);
    REQUIRE(rep.values.size() == 1);
    CHECK(rep.values.front() == value_of(s));
  }
}

TEST_CASE("reduction terminates for total depth up to four")
{
  const std::vector<ModeOp> pool{op("X+a(-1)"), op("X-a(-1)"), op("H(-1)"), op("Ta(-1)"), op("X+a(-2)"), op("X-a(-2)")};
  int count = 0;
  for (const ModeOp& x : pool)
    for (const ModeOp& y : pool)
      for (const ModeOp& z : pool) {
        if (-(x.mode + y.mode + z.mode) > 4) continue;
        PairingEnv env;
        env.level = 2;
        const ReduceResult r = reduce(CorrelatorState::single(Slots{Word{x}, Word{y}, Word{z}}), env);
        CHECK(r.ok);
        CHECK(r.steps > 0);
        ++count;
      }
  CHECK(count > 50);

  PairingEnv env;
  const ReduceResult tight = reduce(correlator_case(CorrelatorCase::III), env, ReduceOptions{1});
  CHECK_FALSE(tight.ok);
  CHECK_FALSE(tight.diagnostic.empty());
}

TEST_CASE("mixed roots are rejected")
{
  PairingEnv env;
  CHECK_THROWS_AS(reduce(CorrelatorState::single(Slots{Word{op("X+a(-1)")}, Word{op("X-b(-1)")}, Word{}}), env),
                  std::invalid_argument);
}

TEST_CASE("script language")
{
  const CorrelatorScript sc = parse_correlator_script(
      "# case three\n"
      "level 2\n"
      "set bH = 1/2\n"
      "slot1: H(-1)\n"
      "slot2: X+b(-1)\n"
      "slot3: X-b(-1)   # trailing comment\n");
  CHECK(sc.env.level == 2);
  CHECK(sc.env.values.at(Symbol::bH) == make_rational(1, 2));
  const ReduceResult r = reduce(sc.state, sc.env);
  REQUIRE(r.ok);
  CHECK(r.value == Polynomial(2) * S(Symbol::bH) * S(Symbol::pb));
  CHECK(r.substituted == S(Symbol::pb));

  const CorrelatorScript vac = parse_correlator_script("slot2: X+a(-1) * X-a(-1)\n");
  CHECK(vac.state.terms.begin()->first[0].empty());
  CHECK(vac.state.terms.begin()->first[1].size() == 2);

  CHECK_THROWS_WITH_AS(parse_correlator_script("level 1\nslot4: H(-1)\n"), doctest::Contains("line 2"),
                       std::invalid_argument);
  CHECK_THROWS_AS(parse_correlator_script("set zz = 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_correlator_script("level 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_correlator_script("slot1: H(-1)\nslot1: H(-1)\n"), std::invalid_argument);
}
