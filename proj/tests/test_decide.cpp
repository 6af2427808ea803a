#include <doctest.h>

#include "nbhd/decide.hpp"
#include "nbhd/error.hpp"
#include "nbhd/filtration.hpp"
#include "nbhd/transform.hpp"

using namespace nbhd;

namespace {

Subset S(Subset::Bits bits) { return Subset(bits); }

SearchConfig small_config(std::size_t budget = 2000) {
  SearchConfig cfg;
  cfg.sample_budget = budget;
  return cfg;
}

const Formula& axiom_for(FrameProperty p) {
  static const Formula t = axiom_t(), m = axiom_m(), c = axiom_c(), four = axiom_4();
  switch (p) {
    case FrameProperty::reflexive:
      return t;
    case FrameProperty::monotonic:
      return m;
    case FrameProperty::regular:
      return c;
    case FrameProperty::transitive:
      return four;
  }
  return t;
}

}  // namespace

TEST_CASE("the documented E witness for []p & ~[][]p holds") {
  const Model m(Frame(2, {S(0), S(0), S(0), S(0b01)}), {{"p", S(0b11)}});
  CHECK(holds_at(m, 0, parse("[]p & ~[][]p")));
  CHECK(satisfies_class(m.frame(), FrameClass::E));
  CHECK(!satisfies_class(m.frame(), FrameClass::E4));
}

TEST_CASE("bounded_sat finds small E witnesses and never refutes axiom 4 on E4") {
  const Formula f = parse("[]p & ~[][]p");
  const SatResult e = bounded_sat(f, FrameClass::E, small_config());
  REQUIRE(e.satisfiable());
  CHECK(e.witness().model.worlds() <= 2);
  CHECK(holds_at(e.witness().model, e.witness().world, f));

  const SatResult e4 = bounded_sat(f, FrameClass::E4, small_config());
  REQUIRE(e4.unknown().max_worlds == 3);
  CHECK(e4.unknown().frames_examined == 4 + 256 + 2000);
  CHECK(e4.unknown().frames_in_class > 0);
}

TEST_CASE("contradictions are unknown in every class") {
  for (const FrameClass c : kAllClasses) {
    const SatResult r = bounded_sat(parse("p & ~p"), c, small_config(300));
    CHECK_FALSE(r.satisfiable());
  }
}

TEST_CASE("countermodel") {
  const SatResult e = countermodel(axiom_4(), FrameClass::E, small_config());
  REQUIRE(e.satisfiable());
  CHECK(!holds_at(e.witness().model, e.witness().world, axiom_4()));

  CHECK_FALSE(countermodel(axiom_4(), FrameClass::E4, small_config()).satisfiable());
  for (const FrameClass c : kAllClasses) CHECK_FALSE(countermodel(parse("top"), c, small_config(300)).satisfiable());

  // M and C fail on E frames but hold on EMC4 frames; T separates E4 from S04.
  CHECK(countermodel(axiom_m(), FrameClass::E4, small_config()).satisfiable());
  CHECK_FALSE(countermodel(axiom_m(), FrameClass::EMC4, small_config()).satisfiable());
  CHECK_FALSE(countermodel(axiom_c(), FrameClass::EMC4, small_config()).satisfiable());
  CHECK(countermodel(axiom_t(), FrameClass::EMC4, small_config()).satisfiable());
  CHECK_FALSE(countermodel(axiom_t(), FrameClass::S04, small_config()).satisfiable());
}

TEST_CASE("class witnesses exist beyond the exhaustive range") {
  SearchConfig cfg = small_config(500);
  cfg.max_worlds = 4;
  cfg.exhaustive_limit = 0;
  for (const FrameClass c : kAllClasses) {
    const SatResult r = bounded_sat(parse("<>p & <>~p & []q"), c, cfg);
    REQUIRE(r.satisfiable());
    CHECK(satisfies_class(r.witness().model.frame(), c));
  }
}

TEST_CASE("search is deterministic for a fixed seed") {
  SearchConfig cfg = small_config(300);
  cfg.max_worlds = 4;
  cfg.exhaustive_limit = 1;
  const Formula f = parse("[]p & ~p & <>q & []<>r");
  for (const FrameClass c : kAllClasses) {
    const SatResult a = bounded_sat(f, c, cfg);
    const SatResult b = bounded_sat(f, c, cfg);
    REQUIRE(a.satisfiable() == b.satisfiable());
    if (a.satisfiable()) {
      CHECK(a.witness().model == b.witness().model);
      CHECK(a.witness().world == b.witness().world);
    } else {
      CHECK(a.unknown().frames_examined == b.unknown().frames_examined);
    }
  }
}

TEST_CASE("witnesses re-verify on random formulas") {
  Rng rng(83);
  SearchConfig cfg = small_config(100);
  for (int i = 0; i < 100; ++i) {
    const Formula f = random_formula(rng, {});
    const FrameClass c = kAllClasses[i % kAllClasses.size()];
    cfg.seed = i;
    const SatResult r = bounded_sat(f, c, cfg);
    if (!r.satisfiable()) continue;
    CHECK(holds_at(r.witness().model, r.witness().world, f));
    CHECK(satisfies_class(r.witness().model.frame(), c));
  }
}

TEST_CASE("axioms of each class are valid on sampled class frames") {
  Rng rng(89);
  int checked = 0;
  for (int i = 0; i < 400; ++i) {
    const int n = 1 + static_cast<int>(uniform_below(rng, 4));
    const Frame candidates[] = {
        grow_until_transitive(random_frame(rng, n)),
        hat_closure(random_frame(rng, n)),
        rm_closure(kripke_to_neighborhood(random_relation(rng, n)), Verification::off),
        supplement(hat_closure(random_frame(rng, n))),
        kripke_to_neighborhood(reflexive_closure(transitive_closure(random_relation(rng, n)))),
    };
    for (const Frame& fr : candidates) {
      for (const FrameClass c : kAllClasses) {
        if (!satisfies_class(fr, c)) continue;
        for (const FrameProperty p : defining_properties(c)) {
          CHECK(valid_on_frame(fr, axiom_for(p)));
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("axiom_report") {
  const AxiomReport id = axiom_report(Frame::identity(3));
  REQUIRE(id.rows.size() == 4);
  for (const auto& row : id.rows) {
    CHECK(row.valid);
    CHECK(row.holds);
  }
  CHECK_FALSE(id.mismatch());

  const AxiomReport odd = axiom_report(Frame(1, {S(0b1), S(0)}));
  CHECK_FALSE(odd.mismatch());
  CHECK(odd.rows[1].axiom == "M");
  CHECK_FALSE(odd.rows[1].valid);
  CHECK_FALSE(odd.rows[1].holds);

  for (const auto& row : axiom_report(Frame::constant(3, S(0))).rows) CHECK(row.valid);
  CHECK_THROWS_AS(axiom_report(Frame::identity(13)), GuardError);
}

TEST_CASE("search configuration is validated") {
  SearchConfig cfg;
  cfg.max_worlds = 0;
  CHECK_THROWS_AS(bounded_sat(parse("p"), FrameClass::E, cfg), ConfigError);
  cfg = {};
  cfg.exhaustive_limit = 4;
  cfg.max_worlds = 5;
  CHECK_THROWS_AS(bounded_sat(parse("p"), FrameClass::E, cfg), ConfigError);
  cfg = {};
  cfg.max_worlds = 1;
  CHECK_THROWS_AS(bounded_sat(parse("p"), FrameClass::E, cfg), ConfigError);
}

TEST_CASE("E4 witnesses filter to small E4 witnesses") {
  const char* formulas[] = {"[]p & ~p", "~[]p & [][]p", "[]~[]p", "<>[]q & ~q", "[]p & <>~p"};
  for (const char* text : formulas) {
    const Formula f = parse(text);
    const SatResult r = bounded_sat(f, FrameClass::E4, small_config(500));
    if (!r.satisfiable()) continue;
    const SigmaSet sigma = subformula_closure(f);
    const auto fr = transitive_filtration(r.witness().model, sigma);
    CHECK(verify_filtration(r.witness().model, fr).passed());
    CHECK(satisfies_class(fr.model.frame(), FrameClass::E4));
    CHECK(fr.model.worlds() <= (1 << sigma.size()));
    CHECK(holds_at(fr.model, fr.partition.class_of(r.witness().world), f));
  }
}
