#include "nbhd/filtration.hpp"

#include <map>
#include <stdexcept>

#include "nbhd/error.hpp"
#include "nbhd/transform.hpp"

namespace nbhd {

Partition::Partition(int source_worlds, std::vector<Subset> classes)
    : source_worlds_(source_worlds), classes_(std::move(classes)), class_of_(source_worlds, -1) {
  if (source_worlds < 1 || source_worlds > Frame::kMaxWorlds) throw std::invalid_argument("world count out of range");
  Subset seen;
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    const Subset c = classes_[i];
    if (c.empty()) throw std::invalid_argument("partition class is empty");
    if (!c.subset_of(Subset::full(source_worlds))) throw std::invalid_argument("partition class exceeds world range");
    if (!(c & seen).empty()) throw std::invalid_argument("partition classes overlap");
    if (i > 0 && classes_[i - 1].first() > c.first()) throw std::invalid_argument("partition classes out of order");
    seen |= c;
    for (int w = 0; w < source_worlds; ++w) {
      if (c.contains(w)) class_of_[w] = static_cast<int>(i);
    }
  }
  if (seen != Subset::full(source_worlds)) throw std::invalid_argument("partition does not cover all worlds");
}

std::string_view to_string(FiltrationKind k) {
  switch (k) {
    case FiltrationKind::minimal: return "minimal";
    case FiltrationKind::transitive: return "transitive";
    case FiltrationKind::s04: return "s04";
    case FiltrationKind::emc4: return "emc4";
  }
  return "?";
}

FiltrationKind parse_filtration_kind(std::string_view name) {
  for (auto k : {FiltrationKind::minimal, FiltrationKind::transitive, FiltrationKind::s04, FiltrationKind::emc4}) {
    if (to_string(k) == name) return k;
  }
  throw std::invalid_argument("unknown filtration kind '" + std::string(name) + "'");
}

namespace {

std::vector<Subset> sigma_truth_sets(const Model& m, const SigmaSet& sigma) {
  std::vector<Subset> out;
  out.reserve(sigma.size());
  for (const auto& f : sigma) out.push_back(truth_set(m, f));
  return out;
}

Partition partition_from_truth_sets(int worlds, const std::vector<Subset>& truths) {
  // Worlds are visited in ascending order, so classes come out sorted by
  // representative.
  std::map<std::vector<bool>, int> index;
  std::vector<Subset> classes;
  for (int w = 0; w < worlds; ++w) {
    std::vector<bool> signature;
    signature.reserve(truths.size());
    for (const Subset t : truths) signature.push_back(t.contains(w));
    auto [it, inserted] = index.emplace(std::move(signature), static_cast<int>(classes.size()));
    if (inserted) classes.emplace_back();
    classes[it->second] |= Subset::single(w);
  }
  return Partition(worlds, std::move(classes));
}

Valuation quotient_valuation(const Model& m, const SigmaSet& sigma, const Partition& p) {
  Valuation v;
  for (const auto& f : sigma) {
    if (f.is(Formula::Kind::variable)) v.emplace(f.name(), quotient_subset(m.value(f.name()), p));
  }
  return v;
}

void require(const Frame& frame, FrameProperty p, std::string_view construction) {
  if (!has_property(frame, p)) {
    const std::string_view name = to_string(p);
    std::string noun;
    if (p == FrameProperty::reflexive) noun = "reflexivity";
    else if (p == FrameProperty::transitive) noun = "transitivity";
    else if (p == FrameProperty::monotonic) noun = "monotonicity";
    else noun = "regularity";
    throw PreconditionError(std::string(construction) + ": " + noun + " precondition failed (source frame is not " +
                            std::string(name) + ")");
  }
}

FiltrationResult with_frame(FiltrationResult base, Frame frame, FiltrationKind kind) {
  Valuation v = base.model.valuation();
  return {Model(std::move(frame), std::move(v)), std::move(base.partition), std::move(base.sigma), kind};
}

}  // namespace

Partition partition_worlds(const Model& m, const SigmaSet& sigma) {
  return partition_from_truth_sets(m.worlds(), sigma_truth_sets(m, sigma));
}

Subset quotient_subset(Subset x, const Partition& p) {
  Subset out;
  for (int i = 0; i < p.size(); ++i) {
    if (!(p.block(i) & x).empty()) out |= Subset::single(i);
  }
  return out;
}

FiltrationResult minimal_filtration(const Model& m, const SigmaSet& sigma) {
  const auto truths = sigma_truth_sets(m, sigma);
  Partition partition = partition_from_truth_sets(m.worlds(), truths);
  const int classes = partition.size();

  std::vector<Subset> box(std::size_t{1} << classes);
  std::vector<int> defined_by(box.size(), -1);
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    const Formula& f = sigma[i];
    if (!f.is(Formula::Kind::box)) continue;
    const Subset argument = quotient_subset(truths[sigma.index_of(f.child())], partition);
    const Subset image = quotient_subset(truths[i], partition);
    int& owner = defined_by[argument.index()];
    if (owner < 0) {
      owner = static_cast<int>(i);
      box[argument.index()] = image;
    } else if (box[argument.index()] != image) {
      throw InternalError("minimal filtration is not well defined: " + render(sigma[owner]) + " and " + render(f) +
                          " share a quotient argument but not an image");
    }
  }
  Valuation v = quotient_valuation(m, sigma, partition);
  return {Model(Frame(classes, std::move(box)), std::move(v)), std::move(partition), sigma, FiltrationKind::minimal};
}

FiltrationResult transitive_filtration(const Model& m, const SigmaSet& sigma) {
  FiltrationResult base = minimal_filtration(m, sigma);
  const Frame& minimal = base.model.frame();
  const Frame hat = hat_closure(minimal);
  std::vector<Subset> box(minimal.subset_count());
  for (std::size_t x = 0; x < box.size(); ++x) box[x] = minimal.table()[x] | hat.table()[x];
  Frame frame(minimal.worlds(), std::move(box));
  return with_frame(std::move(base), std::move(frame), FiltrationKind::transitive);
}

FiltrationResult s04_filtration(const Model& m, const SigmaSet& sigma) {
  require(m.frame(), FrameProperty::monotonic, "s04 filtration");
  require(m.frame(), FrameProperty::transitive, "s04 filtration");
  FiltrationResult base = transitive_filtration(m, sigma);
  Frame frame = supplement(base.model.frame());
  return with_frame(std::move(base), std::move(frame), FiltrationKind::s04);
}

FiltrationResult emc4_filtration(const Model& m, const SigmaSet& sigma) {
  require(m.frame(), FrameProperty::transitive, "emc4 filtration");
  require(m.frame(), FrameProperty::monotonic, "emc4 filtration");
  require(m.frame(), FrameProperty::regular, "emc4 filtration");
  FiltrationResult base = transitive_filtration(m, sigma);
  Frame frame = rm_closure(base.model.frame());
  return with_frame(std::move(base), std::move(frame), FiltrationKind::emc4);
}

FiltrationResult filtrate(const Model& m, const SigmaSet& sigma, FiltrationKind kind) {
  switch (kind) {
    case FiltrationKind::minimal: return minimal_filtration(m, sigma);
    case FiltrationKind::transitive: return transitive_filtration(m, sigma);
    case FiltrationKind::s04: return s04_filtration(m, sigma);
    case FiltrationKind::emc4: return emc4_filtration(m, sigma);
  }
  throw std::invalid_argument("unknown filtration kind");
}

FiltrationResult filtrate(const Model& m, const Formula& f, FiltrationKind kind) {
  return filtrate(m, subformula_closure(f), kind);
}

// ---------------------------------------------------------------------------

std::string_view to_string(CheckResult::Clause c) {
  switch (c) {
    case CheckResult::Clause::worlds: return "worlds";
    case CheckResult::Clause::box: return "box";
    case CheckResult::Clause::valuation: return "valuation";
    case CheckResult::Clause::truth: return "truth";
  }
  return "?";
}

bool FiltrationReport::passed() const { return first_failure() == nullptr; }

const CheckResult* FiltrationReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

FiltrationReport verify_filtration(const Model& m, const FiltrationResult& fr) {
  using Clause = CheckResult::Clause;
  FiltrationReport report;
  const SigmaSet& sigma = fr.sigma;
  const auto truths = sigma_truth_sets(m, sigma);
  const Partition expected = partition_from_truth_sets(m.worlds(), truths);

  const bool worlds_ok = fr.partition == expected && fr.model.worlds() == expected.size();
  report.checks.push_back({Clause::worlds, worlds_ok, std::nullopt,
                           worlds_ok ? "" : "quotient worlds do not match the Sigma-equivalence classes"});
  if (!worlds_ok) return report;

  const Model& mf = fr.model;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    const Formula& f = sigma[i];
    if (f.is(Formula::Kind::box)) {
      const Subset argument = quotient_subset(truths[sigma.index_of(f.child())], expected);
      const Subset want = quotient_subset(truths[i], expected);
      const Subset got = mf.frame()(argument);
      report.checks.push_back({Clause::box, got == want, f,
                               got == want ? "" : "box(" + std::to_string(argument.bits()) + ") = " +
                                                      std::to_string(got.bits()) + ", expected " +
                                                      std::to_string(want.bits())});
    } else if (f.is(Formula::Kind::variable)) {
      const Subset want = quotient_subset(m.value(f.name()), expected);
      const Subset got = mf.value(f.name());
      report.checks.push_back({Clause::valuation, got == want, f,
                               got == want ? "" : "V(" + f.name() + ") = " + std::to_string(got.bits()) +
                                                      ", expected " + std::to_string(want.bits())});
    }
  }
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    const Subset want = quotient_subset(truths[i], expected);
    const Subset got = truth_set(mf, sigma[i]);
    report.checks.push_back({Clause::truth, got == want, sigma[i],
                             got == want ? "" : "truth set " + std::to_string(got.bits()) + ", expected " +
                                                    std::to_string(want.bits())});
  }
  return report;
}

}  // namespace nbhd
