#ifndef NBHD_FORMULA_HPP
#define NBHD_FORMULA_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nbhd {

/// Immutable modal formula over the core connectives: variables, negation,
/// conjunction and box. Derived connectives are expanded on construction, so
/// two formulas compare equal exactly when their core trees coincide.
class Formula {
 public:
  enum class Kind { variable, negation, conjunction, box };

  static Formula var(std::string name);
  static Formula neg(Formula child);
  static Formula conj(Formula left, Formula right);
  static Formula box(Formula child);

  Kind kind() const noexcept;
  bool is(Kind k) const noexcept { return kind() == k; }

  /// Variable name; empty for compound formulas.
  const std::string& name() const noexcept;
  /// Operand of a negation or box.
  const Formula& child() const;
  const Formula& left() const;
  const Formula& right() const;

  std::size_t node_count() const noexcept;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// `[a-z][a-zA-Z0-9_]*`, excluding the keywords `top` and `bot`.
bool is_valid_variable_name(std::string_view name);

// Derived connectives, expanded into the core language.
Formula disj(Formula a, Formula b);
Formula implies(Formula a, Formula b);
Formula equiv(Formula a, Formula b);
Formula diamond(Formula a);
/// ~(p & ~p) over the reserved variable `p`.
Formula top();
/// p & ~p over the reserved variable `p`.
Formula bot();

inline constexpr std::string_view kReservedVariable = "p";

/// Parse result that also remembers whether the surface text was free of
/// variable tokens. `top`/`bot` expand to formulas over `p`, so this cannot be
/// recovered from the tree.
struct ParsedFormula {
  Formula formula;
  bool surface_variable_free;
};

/// Grammar, loosest first: `<->` (left), `->` (right), `|`, `&`, then prefix
/// `~`, `[]`, `<>`. Atoms are identifiers, `top`, `bot`, or parenthesized.
ParsedFormula parse_surface(std::string_view text);
Formula parse(std::string_view text);

/// Core-syntax text with minimal parentheses; parse(render(f)) == f.
std::string render(const Formula& f);

using Substitution = std::map<std::string, Formula, std::less<>>;

Formula substitute(const Formula& f, const Substitution& s);

std::set<std::string> variables(const Formula& f);
bool is_variable_free(const ParsedFormula& parsed);
int modal_depth(const Formula& f);

/// Total order used for subformula listings: node count, then rendering.
bool subformula_less(const Formula& a, const Formula& b);

/// A duplicate-free, subformula-closed list of formulas in ascending
/// (node count, rendering) order. Every subformula precedes its superformulas.
class SigmaSet {
 public:
  SigmaSet() = default;

  /// Throws std::invalid_argument unless `formulas` is closed under
  /// immediate subformulas. Duplicates are dropped and order normalized.
  static SigmaSet from_closed(std::vector<Formula> formulas);

  std::size_t size() const noexcept { return formulas_.size(); }
  bool empty() const noexcept { return formulas_.empty(); }
  const Formula& operator[](std::size_t i) const { return formulas_[i]; }
  auto begin() const noexcept { return formulas_.begin(); }
  auto end() const noexcept { return formulas_.end(); }
  std::span<const Formula> formulas() const noexcept { return formulas_; }

  bool contains(const Formula& f) const;
  /// Index within the set, or -1.
  int index_of(const Formula& f) const;

  friend bool operator==(const SigmaSet& a, const SigmaSet& b) { return a.formulas_ == b.formulas_; }

 private:
  friend SigmaSet subformula_closure(std::span<const Formula> roots);

  explicit SigmaSet(std::vector<Formula> sorted);

  std::vector<Formula> formulas_;
  std::map<std::string, int, std::less<>> index_;
};

SigmaSet subformula_closure(const Formula& f);
SigmaSet subformula_closure(std::span<const Formula> roots);

// ---------------------------------------------------------------------------

struct Formula::Node {
  Kind kind;
  std::string name;
  std::vector<Formula> children;
  std::size_t size;
};

inline Formula::Kind Formula::kind() const noexcept { return node_->kind; }
inline const std::string& Formula::name() const noexcept { return node_->name; }
inline std::size_t Formula::node_count() const noexcept { return node_->size; }

}  // namespace nbhd

#endif  // NBHD_FORMULA_HPP
