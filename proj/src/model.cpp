#include "nbhd/model.hpp"

#include <algorithm>
#include <stdexcept>

#include "nbhd/error.hpp"

namespace nbhd {

Frame::Frame(int worlds, std::vector<Subset> box) : worlds_(worlds), box_(std::move(box)) {
  if (worlds < 1 || worlds > kMaxWorlds) {
    throw FrameError("world count must be in [1, " + std::to_string(kMaxWorlds) + "], got " +
                     std::to_string(worlds));
  }
  const std::size_t expected = std::size_t{1} << worlds;
  if (box_.size() != expected) throw FrameError("table length must be " + std::to_string(expected));
  const Subset all = universe();
  for (std::size_t m = 0; m < box_.size(); ++m) {
    if (!box_[m].subset_of(all)) {
      throw FrameError("entry exceeds world range: box[" + std::to_string(m) + "] = " +
                       std::to_string(box_[m].bits()));
    }
  }
}

Frame Frame::from_bits(int worlds, std::span<const Subset::Bits> table) {
  std::vector<Subset> box;
  box.reserve(table.size());
  for (auto bits : table) box.emplace_back(bits);
  return Frame(worlds, std::move(box));
}

Frame Frame::identity(int worlds) {
  if (worlds < 1 || worlds > kMaxWorlds) return Frame(worlds, {});
  std::vector<Subset> box(std::size_t{1} << worlds);
  for (std::size_t m = 0; m < box.size(); ++m) box[m] = Subset(static_cast<Subset::Bits>(m));
  return Frame(worlds, std::move(box));
}

Frame Frame::constant(int worlds, Subset value) {
  if (worlds < 1 || worlds > kMaxWorlds) return Frame(worlds, {});
  return Frame(worlds, std::vector<Subset>(std::size_t{1} << worlds, value));
}

std::vector<Subset> Frame::neighborhood(int world) const {
  if (world < 0 || world >= worlds_) throw FrameError("world out of range: " + std::to_string(world));
  std::vector<Subset> out;
  for (std::size_t m = 0; m < box_.size(); ++m) {
    if (box_[m].contains(world)) out.emplace_back(static_cast<Subset::Bits>(m));
  }
  return out;
}

Model::Model(Frame frame, Valuation valuation) : frame_(std::move(frame)), valuation_(std::move(valuation)) {
  const Subset all = frame_.universe();
  for (const auto& [name, value] : valuation_) {
    if (!is_valid_variable_name(name)) throw FrameError("invalid variable name '" + name + "'");
    if (!value.subset_of(all)) throw FrameError("valuation of '" + name + "' exceeds world range");
  }
}

Subset Model::value(std::string_view variable) const {
  auto it = valuation_.find(variable);
  return it == valuation_.end() ? Subset{} : it->second;
}

std::string_view to_string(FrameProperty p) {
  switch (p) {
    case FrameProperty::reflexive: return "reflexive";
    case FrameProperty::transitive: return "transitive";
    case FrameProperty::monotonic: return "monotonic";
    case FrameProperty::regular: return "regular";
  }
  return "?";
}

std::string_view to_string(FrameClass c) {
  switch (c) {
    case FrameClass::E: return "E";
    case FrameClass::E4: return "E4";
    case FrameClass::EMC4: return "EMC4";
    case FrameClass::S04: return "S04";
  }
  return "?";
}

FrameClass parse_frame_class(std::string_view name) {
  for (auto c : kAllClasses) {
    if (to_string(c) == name) return c;
  }
  throw std::invalid_argument("unknown frame class '" + std::string(name) + "'");
}

std::span<const FrameProperty> defining_properties(FrameClass c) {
  static constexpr std::array<FrameProperty, 1> e4 = {FrameProperty::transitive};
  static constexpr std::array<FrameProperty, 3> emc4 = {FrameProperty::transitive, FrameProperty::monotonic,
                                                        FrameProperty::regular};
  static constexpr std::array<FrameProperty, 3> s04 = {FrameProperty::transitive, FrameProperty::monotonic,
                                                       FrameProperty::reflexive};
  switch (c) {
    case FrameClass::E: return {};
    case FrameClass::E4: return e4;
    case FrameClass::EMC4: return emc4;
    case FrameClass::S04: return s04;
  }
  return {};
}

Frame validate_frame(int worlds, std::span<const Subset::Bits> table) { return Frame::from_bits(worlds, table); }

// ---------------------------------------------------------------------------

CompiledFormula::CompiledFormula(const Formula& f) {
  const SigmaSet closure = subformula_closure(f);
  for (const auto& name : nbhd::variables(f)) variables_.push_back(name);
  steps_.reserve(closure.size());
  for (const auto& g : closure) {
    switch (g.kind()) {
      case Formula::Kind::variable: {
        const auto it = std::lower_bound(variables_.begin(), variables_.end(), g.name());
        steps_.push_back({g.kind(), static_cast<int>(it - variables_.begin()), 0});
        break;
      }
      case Formula::Kind::negation:
      case Formula::Kind::box:
        steps_.push_back({g.kind(), closure.index_of(g.child()), 0});
        break;
      case Formula::Kind::conjunction:
        steps_.push_back({g.kind(), closure.index_of(g.left()), closure.index_of(g.right())});
        break;
    }
  }
}

Subset CompiledFormula::evaluate(const Frame& frame, std::span<const Subset> values,
                                 std::vector<Subset>& scratch) const {
  if (values.size() != variables_.size()) throw std::invalid_argument("expected one value per variable");
  scratch.resize(steps_.size());
  const int n = frame.worlds();
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    const Step& s = steps_[i];
    switch (s.kind) {
      case Formula::Kind::variable: scratch[i] = values[s.a]; break;
      case Formula::Kind::negation: scratch[i] = scratch[s.a].complement_in(n); break;
      case Formula::Kind::conjunction: scratch[i] = scratch[s.a] & scratch[s.b]; break;
      case Formula::Kind::box: scratch[i] = frame(scratch[s.a]); break;
    }
  }
  // The root has the largest node count, so it is always last.
  return scratch.back();
}

Subset CompiledFormula::evaluate(const Frame& frame, std::span<const Subset> values) const {
  std::vector<Subset> scratch;
  return evaluate(frame, values, scratch);
}

Subset CompiledFormula::evaluate(const Model& m) const {
  std::vector<Subset> values;
  values.reserve(variables_.size());
  for (const auto& name : variables_) values.push_back(m.value(name) & m.frame().universe());
  return evaluate(m.frame(), values);
}

Subset truth_set(const Model& m, const Formula& f) { return CompiledFormula(f).evaluate(m); }

bool holds_at(const Model& m, int world, const Formula& f) {
  if (world < 0 || world >= m.worlds()) throw FrameError("world out of range: " + std::to_string(world));
  return truth_set(m, f).contains(world);
}

bool valid_on_frame(const Frame& frame, const Formula& f) {
  const CompiledFormula compiled(f);
  const int n = frame.worlds();
  const int k = static_cast<int>(compiled.variables().size());
  if (n * k > kValidityGuard) {
    throw GuardError("validity check needs 2^" + std::to_string(n * k) + " valuations (limit 2^" +
                     std::to_string(kValidityGuard) + ")");
  }
  const Subset all = frame.universe();
  const std::uint64_t total = std::uint64_t{1} << (n * k);
  std::vector<Subset> values(k);
  std::vector<Subset> scratch;
  for (std::uint64_t code = 0; code < total; ++code) {
    for (int j = 0; j < k; ++j) values[j] = Subset(static_cast<Subset::Bits>(code >> (j * n))) & all;
    if (compiled.evaluate(frame, values, scratch) != all) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Frame properties

bool is_reflexive(const Frame& frame) {
  const auto table = frame.table();
  for (std::size_t m = 0; m < table.size(); ++m) {
    if (!table[m].subset_of(Subset(static_cast<Subset::Bits>(m)))) return false;
  }
  return true;
}

bool is_transitive(const Frame& frame) {
  for (const Subset image : frame.table()) {
    if (!image.subset_of(frame(image))) return false;
  }
  return true;
}

bool is_monotonic(const Frame& frame) {
  // Inclusion is generated by single-element extensions, so the covering
  // pairs X < X + {i} decide the full pairwise condition.
  const auto table = frame.table();
  for (std::size_t m = 0; m < table.size(); ++m) {
    for (int i = 0; i < frame.worlds(); ++i) {
      const std::size_t up = m | (std::size_t{1} << i);
      if (up != m && !table[m].subset_of(table[up])) return false;
    }
  }
  return true;
}

bool is_regular(const Frame& frame) {
  const auto table = frame.table();
  for (std::size_t x = 0; x < table.size(); ++x) {
    for (std::size_t y = x + 1; y < table.size(); ++y) {
      if (!(table[x] & table[y]).subset_of(table[x & y])) return false;
    }
  }
  return true;
}

bool has_property(const Frame& frame, FrameProperty p) {
  switch (p) {
    case FrameProperty::reflexive: return is_reflexive(frame);
    case FrameProperty::transitive: return is_transitive(frame);
    case FrameProperty::monotonic: return is_monotonic(frame);
    case FrameProperty::regular: return is_regular(frame);
  }
  return false;
}

bool satisfies_class(const Frame& frame, FrameClass c) {
  for (auto p : defining_properties(c)) {
    if (!has_property(frame, p)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

Frame kripke_to_neighborhood(std::span<const Subset> successors) {
  const int n = static_cast<int>(successors.size());
  if (n < 1 || n > Frame::kMaxWorlds) throw FrameError("world count out of range");
  std::vector<Subset> box(std::size_t{1} << n);
  for (std::size_t m = 0; m < box.size(); ++m) {
    const Subset x(static_cast<Subset::Bits>(m));
    Subset image;
    for (int w = 0; w < n; ++w) {
      if (successors[w].subset_of(x)) image |= Subset::single(w);
    }
    box[m] = image;
  }
  return Frame(n, std::move(box));
}

Frame kripke_to_neighborhood(int worlds, std::span<const std::pair<int, int>> relation) {
  if (worlds < 1 || worlds > Frame::kMaxWorlds) throw FrameError("world count out of range");
  std::vector<Subset> successors(worlds);
  for (const auto& [from, to] : relation) {
    if (from < 0 || from >= worlds || to < 0 || to >= worlds) {
      throw FrameError("relation pair (" + std::to_string(from) + ", " + std::to_string(to) + ") out of range");
    }
    successors[from] |= Subset::single(to);
  }
  return kripke_to_neighborhood(successors);
}

}  // namespace nbhd
