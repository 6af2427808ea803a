#include "nbhd/formula.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <utility>

#include "nbhd/error.hpp"

namespace nbhd {

Formula Formula::var(std::string name) {
  if (!is_valid_variable_name(name)) {
    throw std::invalid_argument("invalid variable name '" + name + "'");
  }
  return Formula(std::make_shared<const Node>(Node{Kind::variable, std::move(name), {}, 1}));
}

Formula Formula::neg(Formula child) {
  const std::size_t size = child.node_count() + 1;
  return Formula(std::make_shared<const Node>(Node{Kind::negation, {}, {std::move(child)}, size}));
}

Formula Formula::conj(Formula left, Formula right) {
  const std::size_t size = left.node_count() + right.node_count() + 1;
  return Formula(
      std::make_shared<const Node>(Node{Kind::conjunction, {}, {std::move(left), std::move(right)}, size}));
}

Formula Formula::box(Formula child) {
  const std::size_t size = child.node_count() + 1;
  return Formula(std::make_shared<const Node>(Node{Kind::box, {}, {std::move(child)}, size}));
}

const Formula& Formula::child() const {
  if (kind() != Kind::negation && kind() != Kind::box) throw std::logic_error("formula has no single operand");
  return node_->children[0];
}

const Formula& Formula::left() const {
  if (kind() != Kind::conjunction) throw std::logic_error("formula is not a conjunction");
  return node_->children[0];
}

const Formula& Formula::right() const {
  if (kind() != Kind::conjunction) throw std::logic_error("formula is not a conjunction");
  return node_->children[1];
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.node_count() != b.node_count()) return false;
  switch (a.kind()) {
    case Formula::Kind::variable:
      return a.name() == b.name();
    case Formula::Kind::negation:
    case Formula::Kind::box:
      return a.child() == b.child();
    case Formula::Kind::conjunction:
      return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

bool is_valid_variable_name(std::string_view name) {
  if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
  if (name == "top" || name == "bot") return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

Formula disj(Formula a, Formula b) {
  return Formula::neg(Formula::conj(Formula::neg(std::move(a)), Formula::neg(std::move(b))));
}

Formula implies(Formula a, Formula b) { return Formula::neg(Formula::conj(std::move(a), Formula::neg(std::move(b)))); }

Formula equiv(Formula a, Formula b) { return Formula::conj(implies(a, b), implies(b, a)); }

Formula diamond(Formula a) { return Formula::neg(Formula::box(Formula::neg(std::move(a)))); }

Formula bot() {
  auto p = Formula::var(std::string(kReservedVariable));
  return Formula::conj(p, Formula::neg(p));
}

Formula top() { return Formula::neg(bot()); }

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ParsedFormula run() {
    skip_space();
    if (at_end()) throw ParseError("empty input", pos_);
    Formula f = parse_equiv();
    skip_space();
    if (!at_end()) {
      if (text_[pos_] == ')') throw ParseError("unbalanced parentheses: unexpected ')'", pos_);
      throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    }
    return {std::move(f), !saw_variable_};
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  Formula parse_equiv() {
    Formula lhs = parse_implies();
    while (accept("<->")) lhs = equiv(lhs, parse_implies());
    return lhs;
  }

  Formula parse_implies() {
    Formula lhs = parse_or();
    if (accept("->")) return implies(std::move(lhs), parse_implies());
    return lhs;
  }

  Formula parse_or() {
    Formula lhs = parse_and();
    while (accept("|")) lhs = disj(lhs, parse_and());
    return lhs;
  }

  Formula parse_and() {
    Formula lhs = parse_unary();
    while (accept("&")) lhs = Formula::conj(lhs, parse_unary());
    return lhs;
  }

  Formula parse_unary() {
    if (accept("~")) return Formula::neg(parse_unary());
    if (accept("[]")) return Formula::box(parse_unary());
    skip_space();
    // "<->" never starts an operand, so "<>" here is unambiguous.
    if (text_.substr(pos_, 3) != "<->" && accept("<>")) return diamond(parse_unary());
    return parse_atom();
  }

  Formula parse_atom() {
    skip_space();
    if (at_end()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      const std::size_t open = pos_++;
      Formula inner = parse_equiv();
      skip_space();
      if (at_end()) throw ParseError("unbalanced parentheses: '(' is never closed", open);
      if (text_[pos_] != ')') throw ParseError(std::string("expected ')' but found '") + text_[pos_] + "'", pos_);
      ++pos_;
      return inner;
    }
    if (c == ')') throw ParseError("unbalanced parentheses: unexpected ')'", pos_);
    if (c >= 'a' && c <= 'z') {
      const std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      const std::string_view word = text_.substr(start, pos_ - start);
      if (word == "top") return top();
      if (word == "bot") return bot();
      saw_variable_ = true;
      return Formula::var(std::string(word));
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  bool saw_variable_ = false;
};

// Binding strength of a formula's outermost connective when rendered.
int render_level(const Formula& f) { return f.is(Formula::Kind::conjunction) ? 1 : 2; }

void render_into(const Formula& f, std::string& out);

void render_operand(const Formula& f, int min_level, std::string& out) {
  if (render_level(f) < min_level) {
    out += '(';
    render_into(f, out);
    out += ')';
  } else {
    render_into(f, out);
  }
}

void render_into(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::variable:
      out += f.name();
      break;
    case Formula::Kind::negation:
      out += '~';
      render_operand(f.child(), 2, out);
      break;
    case Formula::Kind::box:
      out += "[]";
      render_operand(f.child(), 2, out);
      break;
    case Formula::Kind::conjunction:
      // & associates to the left, so only a conjunction on the right needs parentheses.
      render_operand(f.left(), 1, out);
      out += " & ";
      render_operand(f.right(), 2, out);
      break;
  }
}

void collect_variables(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::variable:
      out.insert(f.name());
      break;
    case Formula::Kind::negation:
    case Formula::Kind::box:
      collect_variables(f.child(), out);
      break;
    case Formula::Kind::conjunction:
      collect_variables(f.left(), out);
      collect_variables(f.right(), out);
      break;
  }
}

}  // namespace

ParsedFormula parse_surface(std::string_view text) { return Parser(text).run(); }

Formula parse(std::string_view text) { return parse_surface(text).formula; }

std::string render(const Formula& f) {
  std::string out;
  render_into(f, out);
  return out;
}

Formula substitute(const Formula& f, const Substitution& s) {
  switch (f.kind()) {
    case Formula::Kind::variable: {
      auto it = s.find(f.name());
      return it == s.end() ? f : it->second;
    }
    case Formula::Kind::negation:
      return Formula::neg(substitute(f.child(), s));
    case Formula::Kind::box:
      return Formula::box(substitute(f.child(), s));
    case Formula::Kind::conjunction:
      return Formula::conj(substitute(f.left(), s), substitute(f.right(), s));
  }
  return f;
}

std::set<std::string> variables(const Formula& f) {
  std::set<std::string> out;
  collect_variables(f, out);
  return out;
}

bool is_variable_free(const ParsedFormula& parsed) { return parsed.surface_variable_free; }

int modal_depth(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::variable:
      return 0;
    case Formula::Kind::negation:
      return modal_depth(f.child());
    case Formula::Kind::box:
      return modal_depth(f.child()) + 1;
    case Formula::Kind::conjunction:
      return std::max(modal_depth(f.left()), modal_depth(f.right()));
  }
  return 0;
}

bool subformula_less(const Formula& a, const Formula& b) {
  if (a.node_count() != b.node_count()) return a.node_count() < b.node_count();
  return render(a) < render(b);
}

// ---------------------------------------------------------------------------
// Subformula-closed sets

namespace {

struct Keyed {
  std::size_t size;
  std::string text;
  Formula formula;

  bool operator<(const Keyed& o) const { return size != o.size ? size < o.size : text < o.text; }
};

void gather(const Formula& f, std::map<std::string, Formula, std::less<>>& seen) {
  if (!seen.emplace(render(f), f).second) return;
  switch (f.kind()) {
    case Formula::Kind::variable:
      break;
    case Formula::Kind::negation:
    case Formula::Kind::box:
      gather(f.child(), seen);
      break;
    case Formula::Kind::conjunction:
      gather(f.left(), seen);
      gather(f.right(), seen);
      break;
  }
}

std::vector<Formula> sorted_unique(std::vector<Formula> formulas) {
  std::vector<Keyed> keyed;
  keyed.reserve(formulas.size());
  for (auto& f : formulas) keyed.push_back({f.node_count(), render(f), std::move(f)});
  std::sort(keyed.begin(), keyed.end());
  keyed.erase(std::unique(keyed.begin(), keyed.end(),
                          [](const Keyed& a, const Keyed& b) { return a.text == b.text; }),
              keyed.end());
  std::vector<Formula> out;
  out.reserve(keyed.size());
  for (auto& k : keyed) out.push_back(std::move(k.formula));
  return out;
}

}  // namespace

SigmaSet::SigmaSet(std::vector<Formula> sorted) : formulas_(std::move(sorted)) {
  for (std::size_t i = 0; i < formulas_.size(); ++i) index_.emplace(render(formulas_[i]), static_cast<int>(i));
}

SigmaSet SigmaSet::from_closed(std::vector<Formula> formulas) {
  SigmaSet set(sorted_unique(std::move(formulas)));
  for (const auto& f : set) {
    const bool closed = [&] {
      switch (f.kind()) {
        case Formula::Kind::variable:
          return true;
        case Formula::Kind::negation:
        case Formula::Kind::box:
          return set.contains(f.child());
        case Formula::Kind::conjunction:
          return set.contains(f.left()) && set.contains(f.right());
      }
      return false;
    }();
    if (!closed) throw std::invalid_argument("formula set is not closed under subformulas: " + render(f));
  }
  return set;
}

bool SigmaSet::contains(const Formula& f) const { return index_of(f) >= 0; }

int SigmaSet::index_of(const Formula& f) const {
  auto it = index_.find(render(f));
  return it == index_.end() ? -1 : it->second;
}

SigmaSet subformula_closure(const Formula& f) { return subformula_closure(std::span<const Formula>(&f, 1)); }

SigmaSet subformula_closure(std::span<const Formula> roots) {
  std::map<std::string, Formula, std::less<>> seen;
  for (const auto& r : roots) gather(r, seen);
  std::vector<Formula> all;
  all.reserve(seen.size());
  for (auto& [text, f] : seen) all.push_back(f);
  return SigmaSet(sorted_unique(std::move(all)));
}

}  // namespace nbhd
