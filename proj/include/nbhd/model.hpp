#ifndef NBHD_MODEL_HPP
#define NBHD_MODEL_HPP

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nbhd/formula.hpp"

namespace nbhd {

/// Set of worlds as a bitmask: world i is a member iff bit i is set.
class Subset {
 public:
  using Bits = std::uint32_t;

  constexpr Subset() = default;
  constexpr explicit Subset(Bits bits) : bits_(bits) {}

  static constexpr Subset full(int worlds) { return Subset((Bits{1} << worlds) - 1); }
  static constexpr Subset single(int world) { return Subset(Bits{1} << world); }

  constexpr Bits bits() const noexcept { return bits_; }
  constexpr std::size_t index() const noexcept { return bits_; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr bool contains(int world) const noexcept { return (bits_ >> world) & 1U; }
  constexpr bool subset_of(Subset other) const noexcept { return (bits_ & ~other.bits_) == 0; }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  /// Least member; undefined on the empty set.
  constexpr int first() const noexcept { return std::countr_zero(bits_); }
  constexpr Subset complement_in(int worlds) const noexcept { return Subset(full(worlds).bits_ & ~bits_); }

  friend constexpr Subset operator&(Subset a, Subset b) noexcept { return Subset(a.bits_ & b.bits_); }
  friend constexpr Subset operator|(Subset a, Subset b) noexcept { return Subset(a.bits_ | b.bits_); }
  /// Set difference.
  friend constexpr Subset operator-(Subset a, Subset b) noexcept { return Subset(a.bits_ & ~b.bits_); }
  constexpr Subset& operator&=(Subset o) noexcept { bits_ &= o.bits_; return *this; }
  constexpr Subset& operator|=(Subset o) noexcept { bits_ |= o.bits_; return *this; }
  friend constexpr auto operator<=>(Subset, Subset) = default;

 private:
  Bits bits_ = 0;
};

/// Finite neighborhood frame given by the table of its box function: entry m
/// is the image of the subset with bitmask m.
class Frame {
 public:
  static constexpr int kMaxWorlds = 16;

  /// Throws FrameError if worlds is outside [1, 16], the table does not have
  /// 2^worlds entries, or an entry mentions a world >= worlds.
  Frame(int worlds, std::vector<Subset> box);

  static Frame from_bits(int worlds, std::span<const Subset::Bits> table);
  static Frame identity(int worlds);
  static Frame constant(int worlds, Subset value);

  int worlds() const noexcept { return worlds_; }
  Subset universe() const noexcept { return Subset::full(worlds_); }
  std::size_t subset_count() const noexcept { return box_.size(); }

  Subset box(Subset x) const { return box_[x.index()]; }
  Subset operator()(Subset x) const { return box_[x.index()]; }
  std::span<const Subset> table() const noexcept { return box_; }

  /// N(w) = {X | w in box X}, in ascending bitmask order.
  std::vector<Subset> neighborhood(int world) const;

  friend bool operator==(const Frame&, const Frame&) = default;

 private:
  int worlds_;
  std::vector<Subset> box_;
};

/// Unmapped variables denote the empty set.
using Valuation = std::map<std::string, Subset, std::less<>>;

class Model {
 public:
  /// Throws FrameError if a valuation entry exceeds the world range or names
  /// an invalid variable.
  Model(Frame frame, Valuation valuation = {});

  const Frame& frame() const noexcept { return frame_; }
  const Valuation& valuation() const noexcept { return valuation_; }
  int worlds() const noexcept { return frame_.worlds(); }
  Subset value(std::string_view variable) const;

  friend bool operator==(const Model&, const Model&) = default;

 private:
  Frame frame_;
  Valuation valuation_;
};

enum class FrameProperty { reflexive, transitive, monotonic, regular };
enum class FrameClass { E, E4, EMC4, S04 };

inline constexpr std::array<FrameProperty, 4> kAllProperties = {
    FrameProperty::reflexive, FrameProperty::transitive, FrameProperty::monotonic, FrameProperty::regular};
inline constexpr std::array<FrameClass, 4> kAllClasses = {FrameClass::E, FrameClass::E4, FrameClass::EMC4,
                                                          FrameClass::S04};

std::string_view to_string(FrameProperty p);
std::string_view to_string(FrameClass c);
/// Accepts "E", "E4", "EMC4", "S04"; throws std::invalid_argument otherwise.
FrameClass parse_frame_class(std::string_view name);
std::span<const FrameProperty> defining_properties(FrameClass c);

Frame validate_frame(int worlds, std::span<const Subset::Bits> table);

Subset truth_set(const Model& m, const Formula& f);
/// Throws FrameError when world is out of range.
bool holds_at(const Model& m, int world, const Formula& f);

/// Largest n * k for which valid_on_frame enumerates all 2^(n*k) valuations.
inline constexpr int kValidityGuard = 24;

/// Throws GuardError when worlds * |variables(f)| > kValidityGuard.
bool valid_on_frame(const Frame& frame, const Formula& f);

bool is_reflexive(const Frame& frame);
bool is_transitive(const Frame& frame);
bool is_monotonic(const Frame& frame);
bool is_regular(const Frame& frame);
bool has_property(const Frame& frame, FrameProperty p);
bool satisfies_class(const Frame& frame, FrameClass c);

/// Successor-set semantics of a relation: box X = {w | every successor of w is in X}.
/// Throws FrameError on a pair outside [0, worlds).
Frame kripke_to_neighborhood(int worlds, std::span<const std::pair<int, int>> relation);
/// Same, with the relation given as one successor bitmask per world.
Frame kripke_to_neighborhood(std::span<const Subset> successors);

/// A formula flattened over its subformula closure for repeated evaluation
/// against many frames and valuations.
class CompiledFormula {
 public:
  explicit CompiledFormula(const Formula& f);

  /// Sorted variable names; evaluate() expects one Subset per entry.
  const std::vector<std::string>& variables() const noexcept { return variables_; }

  Subset evaluate(const Frame& frame, std::span<const Subset> values, std::vector<Subset>& scratch) const;
  Subset evaluate(const Frame& frame, std::span<const Subset> values) const;
  Subset evaluate(const Model& m) const;

 private:
  struct Step {
    Formula::Kind kind;
    int a;  // variable index for variables, operand index otherwise
    int b;
  };

  std::vector<std::string> variables_;
  std::vector<Step> steps_;
};

}  // namespace nbhd

#endif  // NBHD_MODEL_HPP
