#include "constrict/model_io.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"

#include "constrict/errors.hpp"

namespace constrict {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& msg) { throw ValidationError(msg); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("not valid JSON: ") + e.what());
  }
}

void check_schema(const json& j) {
  if (!j.is_object()) fail("top level must be a JSON object");
  if (!j.contains("schema")) fail("missing field 'schema'");
  if (!j["schema"].is_number_integer() || j["schema"].get<long>() != 1)
    fail("unsupported schema " + j["schema"].dump() +
         "; this build reads schema 1");
}

const json& get_field(const json& j, const char* name) {
  if (!j.contains(name)) fail(std::string("missing field '") + name + "'");
  return j[name];
}

Rational rational_field(const json& v, const std::string& where) {
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const Error& e) {
      fail(where + ": " + e.what());
    }
  }
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_number_float())
    fail(where +
         ": floating point literals are not exact; write a rational string "
         "like \"3/10\"");
  fail(where + ": expected a rational string or integer, got " + v.dump());
}

std::vector<Rational> rational_row(const json& row, const std::string& where,
                                   int expected) {
  if (!row.is_array()) fail(where + ": expected an array");
  if (static_cast<int>(row.size()) != expected)
    fail(where + ": expected " + std::to_string(expected) + " entries, got " +
         std::to_string(row.size()));
  std::vector<Rational> out;
  out.reserve(row.size());
  for (std::size_t i = 0; i < row.size(); ++i)
    out.push_back(
        rational_field(row[i], where + " entry " + std::to_string(i)));
  return out;
}

StateSpace space_from(const json& j) {
  const json& atoms = get_field(j, "atoms");
  if (!atoms.is_array() || atoms.empty())
    fail("'atoms' must be a nonempty array of labels");
  std::vector<std::string> labels;
  labels.reserve(atoms.size());
  for (const auto& a : atoms) {
    if (!a.is_string()) fail("'atoms' entries must be strings");
    labels.push_back(a.get<std::string>());
  }
  return StateSpace(std::move(labels));
}

std::map<std::string, Event> named_events(const json& j,
                                          const StateSpace& space) {
  std::map<std::string, Event> out;
  if (!j.contains("events")) return out;
  const json& ev = j["events"];
  if (!ev.is_object()) fail("'events' must be an object of name: event");
  for (const auto& [name, value] : ev.items()) {
    if (!value.is_string())
      fail("'events' entry '" + name + "' must be an event string");
    try {
      out.emplace(name, parse_event(space, value.get<std::string>()));
    } catch (const Error& e) {
      fail("'events' entry '" + name + "': " + e.what());
    }
  }
  return out;
}

std::map<std::string, Partition> named_partitions(const json& j,
                                                  const StateSpace& space) {
  std::map<std::string, Partition> out;
  if (!j.contains("partitions")) return out;
  const json& ps = j["partitions"];
  if (!ps.is_object())
    fail("'partitions' must be an object of name: block list");
  for (const auto& [name, value] : ps.items()) {
    if (!value.is_array())
      fail("'partitions' entry '" + name + "' must be an array of blocks");
    std::vector<std::string> blocks;
    for (const auto& b : value) {
      if (!b.is_string())
        fail("'partitions' entry '" + name + "' blocks must be event strings");
      blocks.push_back(b.get<std::string>());
    }
    try {
      out.emplace(name, parse_partition(space, blocks));
    } catch (const Error& e) {
      fail("'partitions' entry '" + name + "': " + e.what());
    }
  }
  return out;
}

template <typename Fn>
auto with_path(const std::string& path, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

}  // namespace

BeliefState ModelFile::state() const {
  switch (kind) {
    case ModelKind::Credal:
      return *credal;
    case ModelKind::Mass:
      return *mass;
    case ModelKind::SingleMeasure:
      return CredalSet(space, {*measure});
  }
  throw Error("unreachable model kind");
}

Event parse_event(const StateSpace& space, const std::string& text) {
  if (text.empty()) fail("empty event string");
  std::uint32_t bits = 0;
  std::stringstream ss(text);
  std::string label;
  while (std::getline(ss, label, '|')) {
    if (label.empty())
      fail("event string '" + text + "' has an empty label");
    bits |= 1u << space.index_of(label);
  }
  return Event(bits, space.size());
}

Partition parse_partition(const StateSpace& space,
                          const std::vector<std::string>& blocks) {
  std::vector<Event> events;
  events.reserve(blocks.size());
  for (const auto& b : blocks) events.push_back(parse_event(space, b));
  return validate_partition(space, events);
}

std::string event_string(const StateSpace& space, const Event& A) {
  std::string out;
  for (int atom : A.members()) {
    if (!out.empty()) out += '|';
    out += space.label(atom);
  }
  return out;
}

ModelFile parse_model_json(const std::string& text) {
  json j = parse_json(text);
  check_schema(j);
  ModelFile mf{space_from(j), ModelKind::Credal, {}, {}, {}, {}, {}};
  const int n = mf.space.size();

  int reps = static_cast<int>(j.contains("credal")) +
             static_cast<int>(j.contains("mass")) +
             static_cast<int>(j.contains("measure"));
  if (reps == 0)
    fail("model needs one of 'credal', 'mass' or 'measure'");
  if (reps > 1)
    fail("model must carry exactly one of 'credal', 'mass' or 'measure'; "
         "found " +
         std::to_string(reps));

  if (j.contains("credal")) {
    const json& rows = j["credal"];
    if (!rows.is_array() || rows.empty())
      fail("'credal' must be a nonempty array of vertex rows");
    std::vector<Measure> vertices;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      std::string where = "'credal' row " + std::to_string(i);
      try {
        vertices.emplace_back(rational_row(rows[i], where, n));
      } catch (const ValidationError&) {
        throw;
      } catch (const Error& e) {
        fail(where + ": " + e.what());
      }
    }
    mf.kind = ModelKind::Credal;
    mf.credal.emplace(mf.space, std::move(vertices));
  } else if (j.contains("mass")) {
    const json& mm = j["mass"];
    if (!mm.is_object())
      fail("'mass' must be an object of event string: rational");
    std::map<std::uint32_t, Rational> masses;
    for (const auto& [key, value] : mm.items()) {
      Event ev = key.empty() ? Event::empty(n) : parse_event(mf.space, key);
      masses[ev.bits()] +=
          rational_field(value, "'mass' entry '" + key + "'");
    }
    mf.kind = ModelKind::Mass;
    mf.mass.emplace(n, std::move(masses));
  } else {
    mf.kind = ModelKind::SingleMeasure;
    mf.measure.emplace(rational_row(j["measure"], "'measure'", n));
  }

  mf.events = named_events(j, mf.space);
  mf.partitions = named_partitions(j, mf.space);
  return mf;
}

ModelFile load_model(const std::string& path) {
  return with_path(path, [&] { return parse_model_json(read_file(path)); });
}

std::string state_to_model_json(const StateSpace& space,
                                const BeliefState& state) {
  json j;
  j["schema"] = 1;
  j["atoms"] = space.labels();
  if (const auto* C = std::get_if<CredalSet>(&state)) {
    json rows = json::array();
    for (const Measure& v : C->vertices()) {
      json row = json::array();
      for (const Rational& w : v.weights()) row.push_back(to_string(w));
      rows.push_back(std::move(row));
    }
    j["credal"] = std::move(rows);
  } else {
    const auto& m = std::get<MassFunction>(state);
    json mm = json::object();
    for (const auto& [mask, v] : m.focal())
      mm[event_string(space, Event(mask, m.atom_count()))] = to_string(v);
    j["mass"] = std::move(mm);
  }
  return j.dump(2) + "\n";
}

WeightMatrix load_weights(const std::string& path) {
  return with_path(path, [&]() -> WeightMatrix {
    json j = parse_json(read_file(path));
    check_schema(j);
    const json& w = get_field(j, "weights");
    if (!w.is_array() || w.empty())
      fail("'weights' must be a nonempty array of rows");
    const int k = static_cast<int>(w.size());
    std::vector<std::vector<Rational>> rows;
    for (int i = 0; i < k; ++i)
      rows.push_back(
          rational_row(w[i], "'weights' row " + std::to_string(i), k));
    return WeightMatrix(std::move(rows));
  });
}

OpinionFile load_opinions(const std::string& path) {
  return with_path(path, [&]() -> OpinionFile {
    json j = parse_json(read_file(path));
    check_schema(j);
    StateSpace space = space_from(j);
    const json& ops = get_field(j, "opinions");
    if (!ops.is_array() || ops.empty())
      fail("'opinions' must be a nonempty array of rows");
    std::vector<Measure> opinions;
    for (std::size_t i = 0; i < ops.size(); ++i) {
      std::string where = "'opinions' row " + std::to_string(i);
      try {
        opinions.emplace_back(rational_row(ops[i], where, space.size()));
      } catch (const ValidationError&) {
        throw;
      } catch (const Error& e) {
        fail(where + ": " + e.what());
      }
    }
    OpinionFile out{OpinionProfile{space, std::move(opinions)},
                    named_events(j, space)};
    validate_profile(out.profile);
    return out;
  });
}

Assessment load_assessment(const std::string& path) {
  return with_path(path, [&]() -> Assessment {
    json j = parse_json(read_file(path));
    check_schema(j);
    StateSpace space = space_from(j);
    const json& list = get_field(j, "assessments");
    if (!list.is_array())
      fail("'assessments' must be an array of {event, prob} objects");
    Assessment a{space, {}, {}, Event::empty(space.size())};
    for (std::size_t i = 0; i < list.size(); ++i) {
      std::string where = "'assessments' entry " + std::to_string(i);
      const json& item = list[i];
      if (!item.is_object() || !item.contains("event") ||
          !item.contains("prob"))
        fail(where + ": expected an object with 'event' and 'prob'");
      if (!item["event"].is_string())
        fail(where + ": 'event' must be an event string");
      try {
        a.events.push_back(
            parse_event(space, item["event"].get<std::string>()));
      } catch (const Error& e) {
        fail(where + ": " + e.what());
      }
      a.probs.push_back(rational_field(item["prob"], where + " 'prob'"));
    }
    if (j.contains("target")) {
      const json& target = j["target"];
      if (!target.is_string()) fail("'target' must be an event string");
      try {
        a.target = parse_event(space, target.get<std::string>());
      } catch (const Error& e) {
        fail(std::string("'target': ") + e.what());
      }
    }
    validate_assessment(a);
    return a;
  });
}

TransferFunction load_transfer(const std::string& path,
                               const StateSpace& space) {
  return with_path(path, [&]() -> TransferFunction {
    json j = parse_json(read_file(path));
    check_schema(j);
    StateSpace file_space = space_from(j);
    if (file_space != space)
      fail("atom labels do not match the model's state space");
    const int n = space.size();
    const json& ev = get_field(j, "evidence");
    if (!ev.is_string()) fail("'evidence' must be an event string");
    Event evidence = parse_event(space, ev.get<std::string>());
    const json& cols = get_field(j, "columns");
    if (!cols.is_object())
      fail("'columns' must be an object of source event: distribution");
    std::map<std::uint32_t, std::map<std::uint32_t, Rational>> columns;
    for (const auto& [xkey, dist] : cols.items()) {
      Event X = xkey.empty() ? Event::empty(n) : parse_event(space, xkey);
      if (!dist.is_object())
        fail("'columns' entry '" + xkey +
             "' must be an object of target event: value");
      auto& col = columns[X.bits()];
      for (const auto& [bkey, value] : dist.items()) {
        Event B = bkey.empty() ? Event::empty(n) : parse_event(space, bkey);
        col[B.bits()] += rational_field(
            value, "'columns' entry '" + xkey + "' target '" + bkey + "'");
      }
    }
    return TransferFunction(n, evidence, std::move(columns));
  });
}

}  // namespace constrict
