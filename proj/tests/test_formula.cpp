#include <doctest.h>

#include <string>
#include <vector>

#include "nbhd/error.hpp"
#include "nbhd/formula.hpp"
#include "nbhd/generate.hpp"

using namespace nbhd;

namespace {

Formula p() { return Formula::var("p"); }
Formula q() { return Formula::var("q"); }

std::vector<std::string> rendered(const SigmaSet& s) {
  std::vector<std::string> out;
  for (const auto& f : s) out.push_back(render(f));
  return out;
}

}  // namespace

TEST_CASE("parse desugars derived connectives") {
  // []p -> [][]p  is  ~([]p & ~[][]p)
  const Formula four = parse("[]p -> [][]p");
  CHECK(four == Formula::neg(Formula::conj(Formula::box(p()), Formula::neg(Formula::box(Formula::box(p()))))));

  CHECK(parse("p & ~p") == Formula::conj(p(), Formula::neg(p())));
  CHECK(parse("<>q") == Formula::neg(Formula::box(Formula::neg(q()))));

  CHECK(parse("p | q") == Formula::neg(Formula::conj(Formula::neg(p()), Formula::neg(q()))));
  CHECK(parse("p <-> q") == Formula::conj(implies(p(), q()), implies(q(), p())));
  CHECK(parse("top") == Formula::neg(Formula::conj(p(), Formula::neg(p()))));
  CHECK(parse("bot") == Formula::conj(p(), Formula::neg(p())));
}

TEST_CASE("parse precedence and associativity") {
  CHECK(parse("p & q | r") == disj(Formula::conj(p(), q()), Formula::var("r")));
  CHECK(parse("p -> q -> r") == implies(p(), implies(q(), Formula::var("r"))));
  CHECK(parse("p & q & r") == Formula::conj(Formula::conj(p(), q()), Formula::var("r")));
  CHECK(parse("~[]p") == Formula::neg(Formula::box(p())));
  CHECK(parse("[]~p & q") == Formula::conj(Formula::box(Formula::neg(p())), q()));
  CHECK(parse("p <-> q <-> r") == equiv(equiv(p(), q()), Formula::var("r")));
  CHECK(parse("p -> q <-> r") == equiv(implies(p(), q()), Formula::var("r")));
  CHECK(parse("  ( p )  ") == p());
  CHECK(parse("x_1 & aB9") == Formula::conj(Formula::var("x_1"), Formula::var("aB9")));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("   "), ParseError);
  CHECK_THROWS_WITH(parse("(p & q"), doctest::Contains("unbalanced"));
  CHECK_THROWS_WITH(parse("p & q)"), doctest::Contains("unbalanced"));
  CHECK_THROWS_AS(parse("p &"), ParseError);
  CHECK_THROWS_AS(parse("P"), ParseError);
  CHECK_THROWS_AS(parse("p q"), ParseError);
  CHECK_THROWS_AS(parse("[p"), ParseError);

  try {
    parse("p & # q");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("render uses core syntax with minimal parentheses") {
  CHECK(render(parse("[]p -> [][]p")) == "~([]p & ~[][]p)");
  CHECK(render(p()) == "p");
  CHECK(render(Formula::box(Formula::neg(q()))) == "[]~q");
  CHECK(render(parse("p & q & r")) == "p & q & r");
  CHECK(render(Formula::conj(p(), Formula::conj(q(), Formula::var("r")))) == "p & (q & r)");
  CHECK(render(parse("<>q")) == "~[]~q");
}

TEST_CASE("render round trip on generated formulas") {
  Rng rng(7);
  FormulaShape shape;
  shape.max_nodes = 20;
  shape.max_depth = 4;
  for (int i = 0; i < 2000; ++i) {
    const Formula f = random_formula(rng, shape);
    REQUIRE(parse(render(f)) == f);
  }
}

TEST_CASE("substitute") {
  const Formula four = parse("[]p -> [][]p");
  const Substitution s{{"p", Formula::box(q())}};
  CHECK(substitute(four, s) == parse("[][]q -> [][][]q"));
  CHECK(render(substitute(four, s)) == "~([][]q & ~[][][]q)");

  CHECK(substitute(p(), {}) == p());
  CHECK(substitute(parse("p & q"), {{"p", q()}, {"q", p()}}) == parse("q & p"));
}

TEST_CASE("substitute is a homomorphism") {
  Rng rng(11);
  const Substitution s{{"p", parse("[]q & r")}, {"q", parse("~[]p")}};
  for (int i = 0; i < 500; ++i) {
    const Formula g = random_formula(rng, {});
    const Formula h = random_formula(rng, {});
    CHECK(substitute(Formula::neg(g), s) == Formula::neg(substitute(g, s)));
    CHECK(substitute(Formula::box(g), s) == Formula::box(substitute(g, s)));
    CHECK(substitute(Formula::conj(g, h), s) == Formula::conj(substitute(g, s), substitute(h, s)));
  }
}

TEST_CASE("subformula closure") {
  CHECK(rendered(subformula_closure(parse("[]p"))) == std::vector<std::string>{"p", "[]p"});
  CHECK(rendered(subformula_closure(parse("[]p -> [][]p"))) ==
        std::vector<std::string>{"p", "[]p", "[][]p", "~[][]p", "[]p & ~[][]p", "~([]p & ~[][]p)"});
  CHECK(rendered(subformula_closure(p())) == std::vector<std::string>{"p"});

  // Shared subformulas are listed once.
  CHECK(subformula_closure(parse("p & p")).size() == 2);
}

TEST_CASE("subformula closure properties") {
  Rng rng(3);
  for (int i = 0; i < 500; ++i) {
    const Formula f = random_formula(rng, {});
    const SigmaSet sigma = subformula_closure(f);
    CHECK(sigma.size() <= f.node_count());
    CHECK(sigma.contains(f));
    // Idempotent: closing the closure adds nothing.
    CHECK(subformula_closure(sigma.formulas()) == sigma);
    // Monotone: the closure of any member is contained in the closure.
    for (const auto& g : sigma) {
      for (const auto& h : subformula_closure(g)) CHECK(sigma.contains(h));
    }
    // Subformulas precede superformulas.
    for (std::size_t j = 1; j < sigma.size(); ++j) CHECK(subformula_less(sigma[j - 1], sigma[j]));
  }
}

TEST_CASE("SigmaSet rejects sets that are not subformula closed") {
  CHECK_THROWS_AS(SigmaSet::from_closed({parse("[]p")}), std::invalid_argument);
  CHECK_NOTHROW(SigmaSet::from_closed({parse("[]p"), p()}));
  CHECK(SigmaSet::from_closed({parse("[]p"), p(), p()}).size() == 2);
}

TEST_CASE("variables and surface variable-freeness") {
  CHECK(variables(parse("[]p & q")) == std::set<std::string>{"p", "q"});
  CHECK(is_variable_free(parse_surface("[]top")));
  CHECK(!is_variable_free(parse_surface("p")));
  CHECK(!is_variable_free(parse_surface("top & p")));
  // The expanded tree of a variable-free input still mentions the reserved variable.
  CHECK(variables(parse_surface("[]top").formula) == std::set<std::string>{"p"});
}

TEST_CASE("modal depth") {
  CHECK(modal_depth(p()) == 0);
  CHECK(modal_depth(parse("[][]p")) == 2);
  CHECK(modal_depth(parse("[]p & q")) == 1);
}

TEST_CASE("invalid variable names are rejected") {
  CHECK_THROWS_AS(Formula::var(""), std::invalid_argument);
  CHECK_THROWS_AS(Formula::var("1p"), std::invalid_argument);
  CHECK_THROWS_AS(Formula::var("p-q"), std::invalid_argument);
}
