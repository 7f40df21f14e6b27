#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "constrict/errors.hpp"
#include "constrict/model_io.hpp"
#include "helpers.hpp"

using namespace constrict;
using test_helpers::R;
using test_helpers::contains;
using test_helpers::message_of;

namespace {

const StateSpace kAbc({"a", "b", "c"});

// Writes content to a scratch file and returns its path.
std::string scratch(const std::string& name, const std::string& content) {
  std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "constrict_io_tests";
  std::filesystem::create_directories(dir);
  std::filesystem::path p = dir / name;
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out << content;
  out.close();
  return p.string();
}

}  // namespace

TEST_CASE("event strings") {
  CHECK(parse_event(kAbc, "a|b") == Event(0b011, 3));
  CHECK(parse_event(kAbc, "c") == Event(0b100, 3));
  CHECK(parse_event(kAbc, "b|a") == Event(0b011, 3));
  CHECK(contains(message_of<ValidationError>([] { parse_event(kAbc, ""); }),
                 "empty event string"));
  CHECK(contains(message_of<ValidationError>([] { parse_event(kAbc, "a||b"); }),
                 "has an empty label"));
  CHECK(contains(message_of<ValidationError>([] { parse_event(kAbc, "a|d"); }),
                 "unknown atom label 'd'"));

  CHECK(event_string(kAbc, Event(0b101, 3)) == "a|c");
  CHECK(event_string(kAbc, Event::empty(3)) == "");
  for (std::uint32_t mask = 1; mask < 8; ++mask) {
    Event A(mask, 3);
    CHECK(parse_event(kAbc, event_string(kAbc, A)) == A);
  }
}

TEST_CASE("partition strings") {
  Partition p = parse_partition(kAbc, {"a|b", "c"});
  CHECK(p.block_count() == 2);
  CHECK(p.blocks()[0] == Event(0b011, 3));
  CHECK(contains(message_of<ValidationError>(
                     [] { parse_partition(kAbc, {"a|b", "b|c"}); }),
                 "overlaps"));
  CHECK(contains(
      message_of<ValidationError>([] { parse_partition(kAbc, {"a|b"}); }),
      "do not cover"));
}

TEST_CASE("credal model files") {
  std::string text = R"({
    "schema": 1,
    "atoms": ["a", "b", "c"],
    "credal": [["1/2", "1/2", "0"], ["0", "1/2", "1/2"]],
    "events": {"E": "a|b"},
    "partitions": {"split": ["a|b", "c"]}
  })";
  ModelFile mf = parse_model_json(text);
  CHECK(mf.kind == ModelKind::Credal);
  REQUIRE(mf.credal.has_value());
  CHECK(mf.credal->vertex_count() == 2);
  CHECK(mf.credal->vertices()[0] == Measure({R("1/2"), R("1/2"), 0}));
  CHECK(mf.events.at("E") == Event(0b011, 3));
  CHECK(mf.partitions.at("split").block_count() == 2);
  CHECK(std::holds_alternative<CredalSet>(mf.state()));
}

TEST_CASE("mass model files") {
  std::string text = R"({
    "schema": 1,
    "atoms": ["a", "b", "c"],
    "mass": {"a|b": "1/4", "b|a": "1/4", "c": "3/10", "a|b|c": "1/5"}
  })";
  ModelFile mf = parse_model_json(text);
  CHECK(mf.kind == ModelKind::Mass);
  REQUIRE(mf.mass.has_value());
  // the two spellings of {a,b} accumulate into one focal set
  CHECK(mf.mass->mass(Event(0b011, 3)) == R("1/2"));
  CHECK(mf.mass->mass(Event(0b111, 3)) == R("1/5"));
  CHECK(std::holds_alternative<MassFunction>(mf.state()));

  CHECK(contains(message_of<ValidationError>([] {
                   parse_model_json(R"({"schema": 1, "atoms": ["a", "b"],
                                        "mass": {"": "1/2", "a|b": "1/2"}})");
                 }),
                 "property (a)"));
}

TEST_CASE("single measure model files") {
  ModelFile mf = parse_model_json(
      R"({"schema": 1, "atoms": ["a", "b"], "measure": [1, 0]})");
  CHECK(mf.kind == ModelKind::SingleMeasure);
  CHECK(*mf.measure == Measure({1, 0}));
  BeliefState st = mf.state();
  const auto* C = std::get_if<CredalSet>(&st);
  REQUIRE(C != nullptr);
  CHECK(C->vertex_count() == 1);
}

TEST_CASE("model files carry exactly one representation") {
  CHECK(contains(message_of<ValidationError>([] {
                   parse_model_json(R"({"schema": 1, "atoms": ["a", "b"]})");
                 }),
                 "model needs one of 'credal', 'mass' or 'measure'"));
  CHECK(contains(message_of<ValidationError>([] {
                   parse_model_json(
                       R"({"schema": 1, "atoms": ["a", "b"],
                           "measure": [1, 0], "mass": {"a": 1}})");
                 }),
                 "exactly one"));
}

TEST_CASE("schema and value checks") {
  CHECK(contains(message_of<ValidationError>(
                     [] { parse_model_json("not json at all"); }),
                 "not valid JSON"));
  CHECK(contains(message_of<ValidationError>([] { parse_model_json("[1]"); }),
                 "top level must be a JSON object"));
  CHECK(contains(
      message_of<ValidationError>([] { parse_model_json(R"({"atoms": []})"); }),
      "missing field 'schema'"));
  CHECK(contains(message_of<ValidationError>([] {
                   parse_model_json(R"({"schema": 2, "atoms": ["a"]})");
                 }),
                 "unsupported schema 2; this build reads schema 1"));
  CHECK(contains(message_of<ValidationError>([] {
                   parse_model_json(
                       R"({"schema": 1, "atoms": ["a", "b"],
                           "measure": [0.5, 0.5]})");
                 }),
                 "floating point literals are not exact"));
  CHECK(contains(message_of<ValidationError>([] {
                   parse_model_json(
                       R"({"schema": 1, "atoms": ["a", "b"],
                           "measure": ["1/3", "1/3", "1/3"]})");
                 }),
                 "'measure': expected 2 entries, got 3"));
  CHECK(contains(message_of<ValidationError>([] {
                   parse_model_json(
                       R"({"schema": 1, "atoms": ["a", "b"],
                           "measure": ["2/3", "x/y"]})");
                 }),
                 "'measure' entry 1"));
  CHECK(contains(message_of<ValidationError>([] {
                   parse_model_json(
                       R"({"schema": 1, "atoms": ["a", "b"],
                           "measure": [true, false]})");
                 }),
                 "expected a rational string or integer"));
  CHECK(contains(message_of<ValidationError>([] {
                   parse_model_json(
                       R"({"schema": 1, "atoms": ["a", "b"],
                           "credal": [["1/2", "2/5"]]})");
                 }),
                 "weights sum to 9/10, not 1"));
  CHECK(contains(message_of<ValidationError>([] {
                   parse_model_json(
                       R"({"schema": 1, "atoms": ["a", "a"],
                           "measure": [1, 0]})");
                 }),
                 "duplicate atom label 'a'"));
  CHECK(contains(message_of<ValidationError>([] {
                   parse_model_json(
                       R"({"schema": 1, "atoms": ["a", "b"], "measure": [1, 0],
                           "events": {"E": "q"}})");
                 }),
                 "'events' entry 'E'"));
}

TEST_CASE("serialization round trips") {
  StateSpace space({"a", "b", "c"});
  BeliefState credal = CredalSet(space, {Measure({R("1/2"), R("1/2"), 0}),
                                         Measure({0, R("1/3"), R("2/3")})});
  std::string out = state_to_model_json(space, credal);
  CHECK(out == state_to_model_json(space, credal));  // deterministic
  ModelFile back = parse_model_json(out);
  CHECK(back.kind == ModelKind::Credal);
  CHECK(*back.credal == std::get<CredalSet>(credal));

  BeliefState mass = MassFunction(
      3, {{0b011, R("1/2")}, {0b100, R("3/10")}, {0b111, R("1/5")}});
  ModelFile mback = parse_model_json(state_to_model_json(space, mass));
  CHECK(mback.kind == ModelKind::Mass);
  CHECK(*mback.mass == std::get<MassFunction>(mass));
}

TEST_CASE("model loading reports the file path") {
  std::string msg = message_of<ValidationError>(
      [] { load_model("/nonexistent/dir/model.json"); });
  CHECK(contains(msg, "/nonexistent/dir/model.json"));
  CHECK(contains(msg, "cannot open"));

  std::string p = scratch("bad_model.json",
                          R"({"schema": 1, "atoms": ["a"], "measure": [2]})");
  std::string wrapped = message_of<ValidationError>([&] { load_model(p); });
  CHECK(contains(wrapped, p));
  CHECK(contains(wrapped, "weights sum to 2, not 1"));
}

TEST_CASE("weight matrix files") {
  std::string p = scratch("weights.json", R"({
    "schema": 1,
    "weights": [["1/2", "1/2"], ["1/4", "3/4"]]
  })");
  WeightMatrix W = load_weights(p);
  CHECK(W.size() == 2);
  CHECK(W.at(1, 1) == R("3/4"));

  std::string bad = scratch("weights_bad.json",
                            R"({"schema": 1,
                                "weights": [["1/2", "1/2"], ["1"]]})");
  CHECK(contains(message_of<ValidationError>([&] { load_weights(bad); }),
                 "'weights' row 1: expected 2 entries, got 1"));
}

TEST_CASE("opinion files") {
  std::string p = scratch("opinions.json", R"({
    "schema": 1,
    "atoms": ["s1", "s2"],
    "opinions": [["1/5", "4/5"], ["4/5", "1/5"]],
    "events": {"A": "s1"}
  })");
  OpinionFile f = load_opinions(p);
  CHECK(f.profile.opinions.size() == 2);
  CHECK(f.profile.opinions[1] == Measure({R("4/5"), R("1/5")}));
  CHECK(f.events.at("A") == Event(0b01, 2));

  std::string bad = scratch("opinions_bad.json",
                            R"({"schema": 1, "atoms": ["s1", "s2"],
                                "opinions": []})");
  CHECK(contains(message_of<ValidationError>([&] { load_opinions(bad); }),
                 "'opinions' must be a nonempty array"));
}

TEST_CASE("assessment files") {
  std::string p = scratch("assessment.json", R"({
    "schema": 1,
    "atoms": ["w1", "w2", "w3", "w4"],
    "assessments": [
      {"event": "w1|w2", "prob": "2/5"},
      {"event": "w2|w3", "prob": "1/2"}
    ],
    "target": "w1|w2|w3"
  })");
  Assessment a = load_assessment(p);
  CHECK(a.events.size() == 2);
  CHECK(a.events[0] == Event(0b0011, 4));
  CHECK(a.probs[1] == R("1/2"));
  CHECK(a.target == Event(0b0111, 4));

  std::string no_target = scratch("assessment_nt.json", R"({
    "schema": 1,
    "atoms": ["w1", "w2"],
    "assessments": [{"event": "w1", "prob": "1/3"}]
  })");
  Assessment b = load_assessment(no_target);
  CHECK(b.target.is_empty());

  std::string bad = scratch("assessment_bad.json", R"({
    "schema": 1,
    "atoms": ["w1", "w2"],
    "assessments": [{"event": "w1", "prob": 0.4}]
  })");
  CHECK(contains(message_of<ValidationError>([&] { load_assessment(bad); }),
                 "floating point literals are not exact"));
}

TEST_CASE("transfer files") {
  std::string p = scratch("transfer.json", R"({
    "schema": 1,
    "atoms": ["a", "b", "c"],
    "evidence": "a|b",
    "columns": {
      "a": {"a": "1"},
      "b": {"b": "1"},
      "c": {"a": "1/2", "b": "1/2"},
      "a|b": {"a|b": "1"},
      "a|c": {"a": "1"},
      "b|c": {"b": "1"},
      "a|b|c": {"a|b": "1"}
    }
  })");
  TransferFunction t = load_transfer(p, kAbc);
  CHECK(t.evidence() == Event(0b011, 3));
  CHECK(t.value(Event(0b001, 3), Event(0b100, 3)) == R("1/2"));
  CHECK(validate_transfer(t).ok);

  CHECK(contains(message_of<ValidationError>([&] {
                   load_transfer(p, StateSpace({"x", "y", "z"}));
                 }),
                 "atom labels do not match"));

  std::string bad = scratch("transfer_bad.json", R"({
    "schema": 1,
    "atoms": ["a", "b"],
    "evidence": "a",
    "columns": {"": {"a": "1"}}
  })");
  CHECK(contains(
      message_of<ValidationError>(
          [&] { load_transfer(bad, StateSpace({"a", "b"})); }),
      "transfer column indexed by a set outside the space"));
}
