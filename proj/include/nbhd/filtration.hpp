#ifndef NBHD_FILTRATION_HPP
#define NBHD_FILTRATION_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nbhd/formula.hpp"
#include "nbhd/model.hpp"

namespace nbhd {

/// Equivalence classes of worlds that agree on every formula of a Sigma set.
/// Classes are indexed by ascending representative (least member).
class Partition {
 public:
  /// Throws std::invalid_argument unless the classes are nonempty, pairwise
  /// disjoint, sorted by least member and cover [0, source_worlds).
  Partition(int source_worlds, std::vector<Subset> classes);

  int source_worlds() const noexcept { return source_worlds_; }
  int size() const noexcept { return static_cast<int>(classes_.size()); }
  Subset block(int i) const { return classes_.at(i); }
  int representative(int i) const { return classes_.at(i).first(); }
  int class_of(int world) const { return class_of_.at(world); }
  const std::vector<Subset>& classes() const noexcept { return classes_; }

  friend bool operator==(const Partition& a, const Partition& b) { return a.classes_ == b.classes_; }

 private:
  int source_worlds_;
  std::vector<Subset> classes_;
  std::vector<int> class_of_;
};

enum class FiltrationKind { minimal, transitive, s04, emc4 };

std::string_view to_string(FiltrationKind k);
/// Accepts "minimal", "transitive", "s04", "emc4".
FiltrationKind parse_filtration_kind(std::string_view name);

struct FiltrationResult {
  Model model;
  Partition partition;
  SigmaSet sigma;
  FiltrationKind kind;
};

Partition partition_worlds(const Model& m, const SigmaSet& sigma);

/// The set of classes that meet `x`.
Subset quotient_subset(Subset x, const Partition& p);

/// Quotient by Sigma; box(X) = ~|[]phi| when X = ~|phi| for some []phi in
/// Sigma, empty otherwise. Throws InternalError if two boxed members of Sigma
/// with the same quotient argument disagree on the image.
FiltrationResult minimal_filtration(const Model& m, const SigmaSet& sigma);
/// Minimal filtration table united entrywise with its hat closure.
FiltrationResult transitive_filtration(const Model& m, const SigmaSet& sigma);
/// Supplemented transitive filtration. Requires a monotonic, transitive source
/// frame; throws PreconditionError otherwise.
FiltrationResult s04_filtration(const Model& m, const SigmaSet& sigma);
/// rm-closed transitive filtration. Requires a transitive, monotonic, regular
/// source frame; throws PreconditionError otherwise.
FiltrationResult emc4_filtration(const Model& m, const SigmaSet& sigma);

FiltrationResult filtrate(const Model& m, const SigmaSet& sigma, FiltrationKind kind);
/// Filtrates through the subformula closure of `f`.
FiltrationResult filtrate(const Model& m, const Formula& f, FiltrationKind kind);

struct CheckResult {
  enum class Clause { worlds, box, valuation, truth };

  Clause clause;
  bool passed;
  std::optional<Formula> formula;  // witness on failure, when one applies
  std::string detail;
};

std::string_view to_string(CheckResult::Clause c);

struct FiltrationReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  /// First failure, if any.
  const CheckResult* first_failure() const;
};

/// Checks the three defining clauses (class worlds, boxed members, variables)
/// and the truth-set equality for every member of fr.sigma.
FiltrationReport verify_filtration(const Model& m, const FiltrationResult& fr);

}  // namespace nbhd

#endif  // NBHD_FILTRATION_HPP
