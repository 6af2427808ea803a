#include "nbhd/decide.hpp"

#include <functional>
#include <optional>

#include "nbhd/error.hpp"
#include "nbhd/transform.hpp"

namespace nbhd {

namespace {

struct Hit {
  std::vector<Subset> values;
  int world;
};

class WorldSearch {
 public:
  WorldSearch(const Formula& f, const SearchConfig& cfg) : compiled_(f), cfg_(cfg) {}

  const std::vector<std::string>& variables() const { return compiled_.variables(); }

  std::optional<Hit> search(const Frame& frame, Rng& rng) {
    const int n = frame.worlds();
    const int k = static_cast<int>(compiled_.variables().size());
    values_.assign(k, Subset{});
    if (n * k <= cfg_.valuation_enumeration_limit) {
      const Subset all = frame.universe();
      const std::uint64_t total = std::uint64_t{1} << (n * k);
      for (std::uint64_t code = 0; code < total; ++code) {
        for (int j = 0; j < k; ++j) values_[j] = Subset(static_cast<Subset::Bits>(code >> (j * n))) & all;
        if (auto hit = try_values(frame)) return hit;
      }
      return std::nullopt;
    }
    for (std::size_t s = 0; s < cfg_.valuation_samples; ++s) {
      for (auto& v : values_) v = random_subset(rng, n);
      if (auto hit = try_values(frame)) return hit;
    }
    return std::nullopt;
  }

 private:
  std::optional<Hit> try_values(const Frame& frame) {
    const Subset t = compiled_.evaluate(frame, values_, scratch_);
    if (t.empty()) return std::nullopt;
    return Hit{values_, t.first()};
  }

  CompiledFormula compiled_;
  const SearchConfig& cfg_;
  std::vector<Subset> values_;
  std::vector<Subset> scratch_;
};

using Generator = std::function<Frame(Rng&, int)>;

Frame kripke_any(Rng& rng, int n) { return kripke_to_neighborhood(random_relation(rng, n)); }
Frame kripke_transitive(Rng& rng, int n) { return kripke_to_neighborhood(transitive_closure(random_relation(rng, n))); }
Frame kripke_preorder(Rng& rng, int n) {
  return kripke_to_neighborhood(reflexive_closure(transitive_closure(random_relation(rng, n))));
}
Frame grown(Rng& rng, int n) { return grow_until_transitive(random_frame(rng, n)); }
Frame hatted(Rng& rng, int n) { return hat_closure(random_frame(rng, n)); }

// Candidate mixes per class. Uniform tables rarely satisfy the frame
// conditions, so each class leans on constructions that produce them.
std::vector<Generator> generators_for(FrameClass c) {
  switch (c) {
    case FrameClass::E:
      return {random_frame,
              kripke_any,
              [](Rng& rng, int n) { return supplement(random_frame(rng, n)); },
              [](Rng& rng, int n) { return intersection_closure(random_frame(rng, n)); },
              hatted,
              grown};
    case FrameClass::E4:
      return {random_frame,
              grown,
              hatted,
              kripke_transitive,
              [](Rng& rng, int n) { return supplement(hatted(rng, n)); },
              [](Rng& rng, int n) { return rm_closure(grown(rng, n), Verification::off); }};
    case FrameClass::EMC4:
      return {kripke_transitive,
              [](Rng& rng, int n) { return rm_closure(grown(rng, n), Verification::off); },
              [](Rng& rng, int n) { return rm_closure(random_frame(rng, n), Verification::off); },
              [](Rng& rng, int n) { return rm_closure(hatted(rng, n), Verification::off); },
              kripke_preorder};
    case FrameClass::S04:
      return {kripke_preorder,
              [](Rng& rng, int n) { return supplement(hatted(rng, n)); },
              [](Rng& rng, int n) { return supplement(grow_until_transitive(random_reflexive_frame(rng, n))); }};
  }
  return {random_frame};
}

void validate(const SearchConfig& cfg) {
  if (cfg.max_worlds < 1 || cfg.max_worlds > Frame::kMaxWorlds) throw ConfigError("max_worlds must be in [1, 16]");
  if (cfg.min_worlds < 1 || cfg.min_worlds > cfg.max_worlds) throw ConfigError("min_worlds must be in [1, max_worlds]");
  if (cfg.exhaustive_limit < 0 || cfg.exhaustive_limit > cfg.max_worlds) {
    throw ConfigError("exhaustive_limit must be in [0, max_worlds]");
  }
  if (cfg.exhaustive_limit > 3) throw ConfigError("exhaustive enumeration is limited to 3 worlds");
  if (cfg.valuation_enumeration_limit > 30) throw ConfigError("valuation_enumeration_limit must be at most 30");
}

SatResult accept(const Formula& f, FrameClass c, const Frame& frame, const std::vector<std::string>& names,
                 const Hit& hit) {
  Valuation v;
  for (std::size_t j = 0; j < names.size(); ++j) v.emplace(names[j], hit.values[j]);
  Model model(frame, std::move(v));
  if (!holds_at(model, hit.world, f) || !satisfies_class(model.frame(), c)) {
    throw InternalError("bounded_sat produced a witness that does not re-verify");
  }
  return {Satisfiable{std::move(model), hit.world}};
}

}  // namespace

SatResult bounded_sat(const Formula& f, FrameClass c, const SearchConfig& cfg) {
  validate(cfg);
  Rng rng(cfg.seed);
  WorldSearch search(f, cfg);
  const auto generators = generators_for(c);
  std::uint64_t examined = 0;
  std::uint64_t in_class = 0;

  auto consider = [&](const Frame& frame) -> std::optional<SatResult> {
    ++examined;
    if (!satisfies_class(frame, c)) return std::nullopt;
    ++in_class;
    if (auto hit = search.search(frame, rng)) return accept(f, c, frame, search.variables(), *hit);
    return std::nullopt;
  };

  for (int n = cfg.min_worlds; n <= cfg.max_worlds; ++n) {
    if (n <= cfg.exhaustive_limit) {
      const std::size_t entries = std::size_t{1} << n;
      const std::uint64_t tables = std::uint64_t{1} << (n * entries);
      std::vector<Subset> box(entries);
      for (std::uint64_t code = 0; code < tables; ++code) {
        for (std::size_t m = 0; m < entries; ++m) {
          box[m] = Subset(static_cast<Subset::Bits>(code >> (m * n))) & Subset::full(n);
        }
        if (auto found = consider(Frame(n, box))) return *found;
      }
    } else {
      for (std::size_t s = 0; s < cfg.sample_budget; ++s) {
        if (auto found = consider(generators[s % generators.size()](rng, n))) return *found;
      }
    }
  }
  return {UnknownUpToBound{cfg.max_worlds, examined, in_class}};
}

SatResult countermodel(const Formula& f, FrameClass c, const SearchConfig& cfg) {
  return bounded_sat(Formula::neg(f), c, cfg);
}

// ---------------------------------------------------------------------------

Formula axiom_t() { return parse("[]p -> p"); }
Formula axiom_m() { return parse("[](p & q) -> []p & []q"); }
Formula axiom_c() { return parse("[]p & []q -> [](p & q)"); }
Formula axiom_4() { return parse("[]p -> [][]p"); }

bool AxiomReport::mismatch() const {
  for (const auto& row : rows) {
    if (row.mismatch()) return true;
  }
  return false;
}

AxiomReport axiom_report(const Frame& frame) {
  const struct {
    const char* name;
    Formula formula;
    FrameProperty property;
  } axioms[] = {
      {"T", axiom_t(), FrameProperty::reflexive},
      {"M", axiom_m(), FrameProperty::monotonic},
      {"C", axiom_c(), FrameProperty::regular},
      {"4", axiom_4(), FrameProperty::transitive},
  };
  AxiomReport report;
  for (const auto& a : axioms) {
    report.rows.push_back({a.name, a.formula, valid_on_frame(frame, a.formula), a.property,
                           has_property(frame, a.property)});
  }
  return report;
}

}  // namespace nbhd
