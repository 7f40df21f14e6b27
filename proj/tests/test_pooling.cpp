#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "constrict/pooling.hpp"
#include "constrict/errors.hpp"
#include "constrict/random_gen.hpp"
#include "helpers.hpp"

using namespace constrict;
using test_helpers::R;
using test_helpers::contains;
using test_helpers::message_of;

namespace {

WeightMatrix fixture_matrix() {
  return WeightMatrix({{R("1/2"), R("1/2")}, {R("1/4"), R("3/4")}});
}

OpinionProfile fixture_profile() {
  StateSpace space({"s1", "s2"});
  return OpinionProfile{space, {Measure({R("1/5"), R("4/5")}),
                                Measure({R("4/5"), R("1/5")})}};
}

}  // namespace

TEST_CASE("weight matrix construction") {
  WeightMatrix W = fixture_matrix();
  CHECK(W.size() == 2);
  CHECK(W.at(1, 0) == R("1/4"));
  CHECK_THROWS_AS(WeightMatrix({}), ValidationError);
  CHECK(contains(message_of<ValidationError>([] {
                   WeightMatrix({{R("1/2"), R("1/2")}, {Rational(1)}});
                 }),
                 "row 1 has 1 entries; expected 2"));
  CHECK(contains(message_of<ValidationError>([] {
                   WeightMatrix({{R("1/2"), R("1/4")}, {0, Rational(1)}});
                 }),
                 "row 0 sums to 3/4, not 1"));
  CHECK(contains(message_of<ValidationError>([] {
                   WeightMatrix({{R("3/2"), R("-1/2")}, {0, Rational(1)}});
                 }),
                 "negative weight in row 0"));
}

TEST_CASE("matrix products and powers") {
  WeightMatrix W = fixture_matrix();
  WeightMatrix W2 = matrix_multiply(W, W);
  CHECK(W2.at(0, 0) == R("3/8"));
  CHECK(W2.at(0, 1) == R("5/8"));
  CHECK(W2.at(1, 0) == R("5/16"));
  CHECK(W2.at(1, 1) == R("11/16"));
  CHECK(matrix_power(W, 2).rows() == W2.rows());
  WeightMatrix I = matrix_power(W, 0);
  CHECK(I.at(0, 0) == 1);
  CHECK(I.at(0, 1) == 0);
  CHECK(matrix_power(W, 1).rows() == W.rows());
  CHECK_THROWS_AS(matrix_power(W, -1), ValidationError);
  CHECK_THROWS_AS(matrix_multiply(W, WeightMatrix({{Rational(1)}})),
                  DomainMismatchError);
}

TEST_CASE("one revision round") {
  OpinionProfile next = degroot_step(fixture_matrix(), fixture_profile());
  REQUIRE(next.opinions.size() == 2);
  CHECK(next.opinions[0] == Measure({R("1/2"), R("1/2")}));
  CHECK(next.opinions[1] == Measure({R("13/20"), R("7/20")}));

  CHECK_THROWS_AS(degroot_step(WeightMatrix({{Rational(1)}}),
                               fixture_profile()),
                  DomainMismatchError);
  OpinionProfile empty{StateSpace({"s1", "s2"}), {}};
  CHECK_THROWS_AS(validate_profile(empty), ValidationError);
  OpinionProfile off{StateSpace({"s1", "s2"}), {Measure({1, 0, 0})}};
  CHECK_THROWS_AS(validate_profile(off), DomainMismatchError);
}

TEST_CASE("consensus condition") {
  ConsensusCondition cc = consensus_condition(fixture_matrix());
  CHECK(cc.holds);
  CHECK(cc.holds_at == 1);

  WeightMatrix id({{Rational(1), 0}, {0, Rational(1)}});
  ConsensusCondition none = consensus_condition(id);
  CHECK(!none.holds);
  CHECK(none.holds_at == -1);
  CHECK(none.checked_up_to == 64);

  WeightMatrix swap({{0, Rational(1)}, {Rational(1), 0}});
  CHECK(!consensus_condition(swap).holds);

  // a cycle with self-loops needs two rounds for a positive column
  WeightMatrix cyc({{R("1/2"), R("1/2"), 0},
                    {0, R("1/2"), R("1/2")},
                    {R("1/2"), 0, R("1/2")}});
  ConsensusCondition two = consensus_condition(cyc);
  CHECK(two.holds);
  CHECK(two.holds_at == 2);

  // a stubborn leader still forces consensus
  WeightMatrix leader({{Rational(1), 0}, {R("1/2"), R("1/2")}});
  CHECK(consensus_condition(leader).holds_at == 1);

  CHECK_THROWS_AS(consensus_condition(fixture_matrix(), 0), ValidationError);
}

TEST_CASE("stationary vectors") {
  StationaryResult st = stationary_vector(fixture_matrix());
  CHECK(st.unique);
  CHECK(st.solution_dim == 0);
  CHECK(st.pi == std::vector<Rational>{R("1/3"), R("2/3")});

  StationaryResult id = stationary_vector(
      WeightMatrix({{Rational(1), 0}, {0, Rational(1)}}));
  CHECK(!id.unique);
  CHECK(id.solution_dim == 1);
  CHECK(id.pi.empty());

  // the two-cycle has no consensus but a unique stationary vector
  StationaryResult swap = stationary_vector(
      WeightMatrix({{0, Rational(1)}, {Rational(1), 0}}));
  CHECK(swap.unique);
  CHECK(swap.pi == std::vector<Rational>{R("1/2"), R("1/2")});

  StationaryResult leader = stationary_vector(
      WeightMatrix({{Rational(1), 0}, {R("1/2"), R("1/2")}}));
  CHECK(leader.unique);
  CHECK(leader.pi == std::vector<Rational>{Rational(1), 0});
}

TEST_CASE("consensus limit") {
  Measure limit = consensus_limit(fixture_matrix(), fixture_profile());
  CHECK(limit == Measure({R("3/5"), R("2/5")}));
  CHECK(contains(
      message_of<ValidationError>([&] {
        consensus_limit(WeightMatrix({{Rational(1), 0}, {0, Rational(1)}}),
                        fixture_profile());
      }),
      "no unique stationary vector"));
}

TEST_CASE("interval trace over revision rounds") {
  Event A(0b01, 2);
  NestingTrace tr = nesting_trace(fixture_matrix(), fixture_profile(), A, 2);
  REQUIRE(tr.intervals.size() == 3);
  CHECK(tr.intervals[0] == ProbInterval(R("1/5"), R("4/5")));
  CHECK(tr.intervals[1] == ProbInterval(R("1/2"), R("13/20")));
  CHECK(tr.intervals[2] == ProbInterval(R("23/40"), R("49/80")));
  CHECK(tr.weakly_nested);
  CHECK(tr.first_strict_at == 1);
  CHECK(tr.first_strict_from == 0);

  NestingTrace none = nesting_trace(fixture_matrix(), fixture_profile(), A, 0);
  CHECK(none.intervals.size() == 1);
  CHECK(none.weakly_nested);
  CHECK(none.first_strict_at == -1);

  // opposite swap of opinions each round: nested only weakly, never strictly
  WeightMatrix swap({{0, Rational(1)}, {Rational(1), 0}});
  NestingTrace flat = nesting_trace(swap, fixture_profile(), A, 3);
  CHECK(flat.weakly_nested);
  CHECK(flat.first_strict_at == -1);

  CHECK_THROWS_AS(
      nesting_trace(fixture_matrix(), fixture_profile(), Event(0b001, 3), 1),
      DomainMismatchError);
  CHECK_THROWS_AS(
      nesting_trace(fixture_matrix(), fixture_profile(), A, -1),
      ValidationError);
}

TEST_CASE("random positive matrices settle on the stationary mixture") {
  Rng rng(303);
  const Rational tol = R("1/1000000000000");
  for (int trial = 0; trial < 20; ++trial) {
    int k = 2 + trial % 4;
    int n = 2 + trial % 3;
    WeightMatrix W(random_positive_stochastic(rng, k));
    CHECK(consensus_condition(W).holds_at == 1);
    StationaryResult st = stationary_vector(W);
    REQUIRE(st.unique);

    // every row of W^64 is the stationary vector up to the contraction bound
    WeightMatrix far = matrix_power(W, 64);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        Rational diff = far.at(i, j) - st.pi[j];
        CHECK(diff < tol);
        CHECK(-diff < tol);
      }

    OpinionProfile F{StateSpace::with_default_labels(n), {}};
    for (int i = 0; i < k; ++i)
      F.opinions.push_back(random_measure(rng, n, false));
    Measure limit = consensus_limit(W, F);
    OpinionProfile cur = F;
    for (int round = 0; round < 64; ++round) cur = degroot_step(W, cur);
    for (const auto& P : cur.opinions)
      for (int a = 0; a < n; ++a) {
        Rational diff = P.weight(a) - limit.weight(a);
        CHECK(diff < tol);
        CHECK(-diff < tol);
      }
  }
}
