#ifndef NBHD_DECIDE_HPP
#define NBHD_DECIDE_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "nbhd/formula.hpp"
#include "nbhd/generate.hpp"
#include "nbhd/model.hpp"

namespace nbhd {

struct SearchConfig {
  /// World counts below this are skipped; used to ask for larger witnesses.
  int min_worlds = 1;
  int max_worlds = 3;
  /// World counts up to this one are enumerated exhaustively (at most 3).
  int exhaustive_limit = 2;
  /// Candidate frames drawn per world count above exhaustive_limit.
  std::size_t sample_budget = 100000;
  std::uint64_t seed = kDefaultSeed;
  /// Valuations are enumerated exhaustively while worlds * variables is at
  /// most this; otherwise valuation_samples random valuations are tried.
  int valuation_enumeration_limit = 16;
  std::size_t valuation_samples = 512;
};

struct Satisfiable {
  Model model;
  int world;
};

struct UnknownUpToBound {
  int max_worlds;
  std::uint64_t frames_examined;
  /// Candidates that passed the class filter and were searched for a world.
  std::uint64_t frames_in_class;
};

/// Either a pointed model or an admission that no witness was found within
/// the configured bound. Never a claim of unsatisfiability.
struct SatResult {
  std::variant<Satisfiable, UnknownUpToBound> outcome;

  bool satisfiable() const noexcept { return std::holds_alternative<Satisfiable>(outcome); }
  const Satisfiable& witness() const { return std::get<Satisfiable>(outcome); }
  const UnknownUpToBound& unknown() const { return std::get<UnknownUpToBound>(outcome); }
};

/// Throws ConfigError on an invalid configuration. A returned witness has
/// been re-checked with holds_at and satisfies_class (InternalError if not).
SatResult bounded_sat(const Formula& f, FrameClass c, const SearchConfig& cfg = {});

/// bounded_sat of the negation: a witness refutes the validity of f.
SatResult countermodel(const Formula& f, FrameClass c, const SearchConfig& cfg = {});

struct AxiomRow {
  std::string axiom;  // "T", "M", "C" or "4"
  Formula formula;
  bool valid;
  FrameProperty property;
  bool holds;

  bool mismatch() const noexcept { return valid != holds; }
};

struct AxiomReport {
  std::vector<AxiomRow> rows;

  bool mismatch() const;
};

/// The axioms T, M, C, 4 in the core language.
Formula axiom_t();
Formula axiom_m();
Formula axiom_c();
Formula axiom_4();

/// Validity of T, M, C, 4 next to the corresponding property checkers.
/// Throws GuardError when a validity check exceeds kValidityGuard.
AxiomReport axiom_report(const Frame& frame);

}  // namespace nbhd

#endif  // NBHD_DECIDE_HPP
