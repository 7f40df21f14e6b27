#include "constrict/updating.hpp"

#include <bit>

#include "constrict/errors.hpp"

namespace constrict {

char rule_tag(UpdateRule rule) {
  switch (rule) {
    case UpdateRule::Bayes: return 'B';
    case UpdateRule::Geometric: return 'G';
    case UpdateRule::Dempster: return 'D';
    case UpdateRule::Imaging: return 'I';
  }
  return '?';
}

UpdateRule rule_from_name(const std::string& name) {
  if (name == "bayes") return UpdateRule::Bayes;
  if (name == "geometric") return UpdateRule::Geometric;
  if (name == "dempster") return UpdateRule::Dempster;
  if (name == "imaging") return UpdateRule::Imaging;
  throw ValidationError("unknown rule '" + name +
                        "'; expected bayes, geometric, dempster, or imaging");
}

std::string rule_name(UpdateRule rule) {
  switch (rule) {
    case UpdateRule::Bayes: return "bayes";
    case UpdateRule::Geometric: return "geometric";
    case UpdateRule::Dempster: return "dempster";
    case UpdateRule::Imaging: return "imaging";
  }
  return "?";
}

namespace {

constexpr int kMaxBuiltinTransferAtoms = 12;

void require_transfer_space(int n) {
  if (n < 1 || n > kMaxDenseAtoms)
    throw ValidationError("transfer function needs between 1 and " +
                          std::to_string(kMaxDenseAtoms) + " atoms");
}

}  // namespace

TransferFunction::TransferFunction(
    int atom_count, Event evidence,
    std::map<std::uint32_t, std::map<std::uint32_t, Rational>> columns)
    : n_(atom_count), evidence_(std::move(evidence)), cols_(std::move(columns)) {
  require_transfer_space(n_);
  if (evidence_.universe_size() != n_)
    throw DomainMismatchError("transfer evidence lives on a different space");
  std::uint32_t full = (n_ >= 32) ? ~0u : ((1u << n_) - 1u);
  for (auto& [x, col] : cols_) {
    if ((x & ~full) != 0 || x == 0)
      throw ValidationError("transfer column indexed by a set outside the space");
    for (auto it = col.begin(); it != col.end();) {
      if ((it->first & ~full) != 0)
        throw ValidationError("transfer target outside the space");
      if (it->second < 0 || it->second > 1)
        throw ValidationError("transfer value " + to_string(it->second) +
                              " outside [0,1]");
      if (it->second == 0)
        it = col.erase(it);
      else
        ++it;
    }
  }
}

TransferFunction TransferFunction::dempster_style(int atom_count,
                                                  Event evidence) {
  require_transfer_space(atom_count);
  if (atom_count > kMaxBuiltinTransferAtoms)
    throw SizeError("builtin transfer functions are generated for at most " +
                    std::to_string(kMaxBuiltinTransferAtoms) + " atoms");
  if (evidence.is_empty())
    throw ValidationError("transfer evidence must be a nonempty event");
  std::uint32_t e = evidence.bits();
  std::map<std::uint32_t, std::map<std::uint32_t, Rational>> cols;
  for (std::uint32_t x = 1; x < (1u << atom_count); ++x) {
    std::uint32_t hit = x & e;
    cols[x][hit ? hit : e] = 1;
  }
  return TransferFunction(atom_count, std::move(evidence), std::move(cols));
}

TransferFunction TransferFunction::uniform_within(int atom_count,
                                                  Event evidence) {
  require_transfer_space(atom_count);
  if (atom_count > kMaxBuiltinTransferAtoms)
    throw SizeError("builtin transfer functions are generated for at most " +
                    std::to_string(kMaxBuiltinTransferAtoms) + " atoms");
  if (evidence.is_empty())
    throw ValidationError("transfer evidence must be a nonempty event");
  std::uint32_t e = evidence.bits();
  std::map<std::uint32_t, std::map<std::uint32_t, Rational>> cols;
  for (std::uint32_t x = 1; x < (1u << atom_count); ++x) {
    std::uint32_t target = (x & e) ? (x & e) : e;
    Rational share(1, std::popcount(target));
    for (int a = 0; a < atom_count; ++a)
      if (target >> a & 1u) cols[x][1u << a] = share;
  }
  return TransferFunction(atom_count, std::move(evidence), std::move(cols));
}

TransferFunction TransferFunction::builtin(const std::string& name,
                                           int atom_count, Event evidence) {
  if (name == "dempster-style")
    return dempster_style(atom_count, std::move(evidence));
  if (name == "uniform-within-E")
    return uniform_within(atom_count, std::move(evidence));
  throw ValidationError("unknown builtin transfer '" + name +
                        "'; expected dempster-style or uniform-within-E");
}

Rational TransferFunction::value(const Event& B, const Event& X) const {
  if (B.universe_size() != n_ || X.universe_size() != n_)
    throw DomainMismatchError("transfer query on a different space");
  auto cit = cols_.find(X.bits());
  if (cit == cols_.end()) return 0;
  auto it = cit->second.find(B.bits());
  return it == cit->second.end() ? Rational(0) : it->second;
}

TransferReport validate_transfer(const TransferFunction& t) {
  TransferReport rep;
  int n = t.atom_count();
  std::uint32_t e = t.evidence().bits();
  std::uint32_t full = (1u << n) - 1u;
  const auto& cols = t.columns();
  for (std::uint32_t x = 1; x <= full; ++x) {
    auto cit = cols.find(x);
    Rational sum = 0;
    if (cit != cols.end()) {
      for (const auto& [b, v] : cit->second) {
        sum += v;
        if (b == 0)
          rep.violations.push_back({'c', b, x, "f(empty set, X) = " + to_string(v)});
        else if ((b & e) == 0)
          rep.violations.push_back(
              {'b', b, x, "mass " + to_string(v) + " sent outside the evidence"});
      }
    }
    if (sum != 1)
      rep.violations.push_back(
          {'a', 0, x, "column sums to " + to_string(sum) + ", not 1"});
  }
  rep.ok = rep.violations.empty();
  return rep;
}

CredalSet gen_bayes_update(const CredalSet& C, const Event& E) {
  const auto& verts = C.vertices();
  for (std::size_t i = 0; i < verts.size(); ++i)
    if (verts[i](E) == 0)
      throw ConditioningError("vertex " + std::to_string(i) +
                              " assigns probability 0 to the evidence");
  std::vector<Measure> post;
  post.reserve(verts.size());
  for (const auto& P : verts) post.push_back(P.conditioned_on(E));
  return CredalSet(C.space(), std::move(post));
}

SetFunction geometric_update(const SetFunction& L, const Event& E) {
  const Rational& le = L(E);
  if (le == 0)
    throw ConditioningError("lower probability of the evidence is 0");
  int n = L.atom_count();
  std::vector<Rational> t;
  t.reserve(1u << n);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
    t.push_back(L.at_mask(mask & E.bits()) / le);
  return SetFunction(n, std::move(t));
}

MassFunction geometric_update(const MassFunction& m, const Event& E) {
  if (!m.all_nonnegative())
    throw ValidationError("geometric conditioning needs a belief-function mass");
  Rational be = m.belief(E);
  if (be == 0)
    throw ConditioningError("belief in the evidence is 0");
  std::map<std::uint32_t, Rational> out;
  for (const auto& [mask, v] : m.focal())
    if ((mask & ~E.bits()) == 0) out[mask] = v / be;
  return MassFunction(m.atom_count(), std::move(out));
}

MassFunction dempster_update(const MassFunction& m, const Event& E) {
  if (!m.all_nonnegative())
    throw ValidationError("Dempster conditioning needs a belief-function mass");
  Rational pe = m.plausibility(E);
  if (pe == 0)
    throw ConditioningError("plausibility of the evidence is 0");
  std::map<std::uint32_t, Rational> out;
  for (const auto& [mask, v] : m.focal()) {
    std::uint32_t hit = mask & E.bits();
    if (hit) out[hit] += v / pe;
  }
  return MassFunction(m.atom_count(), std::move(out));
}

MassFunction imaging_update(const MassFunction& m, const TransferFunction& t) {
  if (t.atom_count() != m.atom_count())
    throw DomainMismatchError("transfer function lives on a different space");
  if (!m.all_nonnegative())
    throw ValidationError("imaging needs a belief-function mass");
  TransferReport rep = validate_transfer(t);
  if (!rep.ok) {
    const auto& v = rep.violations.front();
    throw ValidationError(std::string("transfer function violates constraint (") +
                          v.constraint + ") at X mask " +
                          std::to_string(v.source) + ": " + v.detail);
  }
  std::map<std::uint32_t, Rational> out;
  const auto& cols = t.columns();
  for (const auto& [x, mv] : m.focal()) {
    auto cit = cols.find(x);
    if (cit == cols.end()) continue;  // unreachable once (a) holds
    for (const auto& [b, f] : cit->second) out[b] += f * mv;
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second == 0)
      it = out.erase(it);
    else
      ++it;
  }
  return MassFunction(m.atom_count(), std::move(out));
}

ProbInterval state_interval(const BeliefState& state, const Event& A) {
  if (const auto* C = std::get_if<CredalSet>(&state))
    return event_interval(*C, A);
  return std::get<MassFunction>(state).interval(A);
}

int state_atom_count(const BeliefState& state) {
  if (const auto* C = std::get_if<CredalSet>(&state)) return C->atom_count();
  return std::get<MassFunction>(state).atom_count();
}

namespace {

MassFunction mass_from_credal(const CredalSet& C, const char* rule) {
  SetFunction L = SetFunction::lower_envelope(C);
  if (!is_belief_function(L))
    throw ValidationError(std::string("the credal set's lower envelope is not "
                                      "a belief function, so the ") +
                          rule + " rule does not apply to it");
  return mobius_transform(L);
}

}  // namespace

UpdateRecord apply_update(const BeliefState& state, UpdateRule rule,
                          const Event& E,
                          const std::optional<TransferFunction>& transfer) {
  if (E.universe_size() != state_atom_count(state))
    throw DomainMismatchError("evidence lives on a different space");
  UpdateRecord r{rule, E, state, state};
  switch (rule) {
    case UpdateRule::Bayes: {
      if (const auto* C = std::get_if<CredalSet>(&state)) {
        r.posterior = gen_bayes_update(*C, E);
      } else {
        const auto& m = std::get<MassFunction>(state);
        if (!m.all_nonnegative())
          throw ValidationError("Bayes updating of a mass model needs a "
                                "belief-function mass");
        CredalSet C2 = core_vertices(belief_from_mass(m));
        r.posterior = gen_bayes_update(C2, E);
      }
      break;
    }
    case UpdateRule::Geometric: {
      if (std::holds_alternative<CredalSet>(state))
        throw ValidationError(
            "geometric updating of a credal set generally leaves the class of "
            "credal and mass models; supply a mass or single-measure model");
      r.posterior = geometric_update(std::get<MassFunction>(state), E);
      break;
    }
    case UpdateRule::Dempster: {
      if (const auto* C = std::get_if<CredalSet>(&state))
        r.posterior = dempster_update(mass_from_credal(*C, "Dempster"), E);
      else
        r.posterior = dempster_update(std::get<MassFunction>(state), E);
      break;
    }
    case UpdateRule::Imaging: {
      if (!transfer)
        throw ValidationError("imaging requires a transfer function");
      if (transfer->evidence().bits() != E.bits() ||
          transfer->evidence().universe_size() != E.universe_size())
        throw ValidationError(
            "transfer function evidence differs from the update evidence");
      if (const auto* C = std::get_if<CredalSet>(&state))
        r.posterior = imaging_update(mass_from_credal(*C, "imaging"), *transfer);
      else
        r.posterior = imaging_update(std::get<MassFunction>(state), *transfer);
      break;
    }
  }
  return r;
}

BeliefState forget(const UpdateRecord& r) { return r.prior; }

BeliefState forget_last(const std::vector<UpdateRecord>& chain, int k) {
  if (chain.empty()) throw ValidationError("empty update chain");
  if (k < 1 || k > static_cast<int>(chain.size()))
    throw ValidationError("cannot forget " + std::to_string(k) + " of " +
                          std::to_string(chain.size()) + " updates");
  return chain[chain.size() - k].prior;
}

}  // namespace constrict
