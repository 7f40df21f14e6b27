#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "constrict/capacity.hpp"
#include "constrict/extension.hpp"
#include "constrict/model.hpp"
#include "constrict/pooling.hpp"
#include "constrict/updating.hpp"

namespace constrict {

/// On-disk model format (schema 1): a JSON object with "atoms" (labels) and
/// exactly one of "credal" (list of vertex rows), "mass" (object keyed by
/// event strings) or "measure" (a single row). Optional "events" and
/// "partitions" objects attach named events and partitions. All numeric
/// values are rational strings like "3/10"; plain JSON integers are also
/// accepted, floating point literals are not.
enum class ModelKind { Credal, Mass, SingleMeasure };

struct ModelFile {
  StateSpace space;
  ModelKind kind = ModelKind::Credal;
  std::optional<CredalSet> credal;
  std::optional<MassFunction> mass;
  std::optional<Measure> measure;
  std::map<std::string, Event> events;
  std::map<std::string, Partition> partitions;

  /// The model as an updatable state. A single measure becomes a one-vertex
  /// credal set.
  BeliefState state() const;
};

/// "a|b|c" with labels from the space; '|' separates member atoms.
Event parse_event(const StateSpace& space, const std::string& text);

/// Each entry is one block in event syntax; blocks must tile the space.
Partition parse_partition(const StateSpace& space,
                          const std::vector<std::string>& blocks);

/// Member labels joined with '|', in atom order. Inverse of parse_event.
std::string event_string(const StateSpace& space, const Event& A);

ModelFile parse_model_json(const std::string& text);
ModelFile load_model(const std::string& path);

/// Serializes a posterior (or any state) back into the model format, with
/// the same atom labels.
std::string state_to_model_json(const StateSpace& space,
                                const BeliefState& state);

/// {"schema": 1, "weights": [[...], ...]} with rational entries.
WeightMatrix load_weights(const std::string& path);

struct OpinionFile {
  OpinionProfile profile;
  std::map<std::string, Event> events;
};

/// {"schema": 1, "atoms": [...], "opinions": [[...], ...]} plus optional
/// named events, one opinion row per agent.
OpinionFile load_opinions(const std::string& path);

/// {"schema": 1, "atoms": [...], "assessments": [{"event": ..., "prob":
/// ...}, ...]} with an optional "target" event; when the file has none the
/// returned target is empty and must be supplied by the caller.
Assessment load_assessment(const std::string& path);

/// {"schema": 1, "atoms": [...], "evidence": ..., "columns": {"X": {"B":
/// value, ...}, ...}} where X and B are event strings ("" is the empty
/// set). Atom labels must match `space` exactly. Loading does not run
/// validate_transfer; imaging does.
TransferFunction load_transfer(const std::string& path,
                               const StateSpace& space);

}  // namespace constrict
