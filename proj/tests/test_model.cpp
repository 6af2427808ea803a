#include <doctest.h>

#include <vector>

#include "nbhd/decide.hpp"
#include "nbhd/error.hpp"
#include "nbhd/generate.hpp"
#include "nbhd/model.hpp"
#include "nbhd/reference.hpp"
#include "nbhd/transform.hpp"

using namespace nbhd;

namespace {

Subset S(Subset::Bits bits) { return Subset(bits); }

// n=2 frame with box{0,1} = {0} and every other entry empty.
Frame two_step_frame() { return Frame(2, {S(0), S(0), S(0), S(0b01)}); }

std::vector<Frame> all_frames(int n) {
  std::vector<Frame> out;
  const std::size_t entries = std::size_t{1} << n;
  const std::uint64_t total = std::uint64_t{1} << (n * entries);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<Subset> box(entries);
    for (std::size_t m = 0; m < entries; ++m) box[m] = S(static_cast<Subset::Bits>(code >> (m * n))) & Subset::full(n);
    out.emplace_back(n, std::move(box));
  }
  return out;
}

}  // namespace

TEST_CASE("validate_frame") {
  const std::vector<Subset::Bits> identity1 = {0b0, 0b1};
  CHECK(validate_frame(1, identity1) == Frame::identity(1));

  const std::vector<Subset::Bits> short_table = {0, 0, 0};
  CHECK_THROWS_WITH_AS(validate_frame(2, short_table), "table length must be 4", FrameError);

  const std::vector<Subset::Bits> wide_entry = {0, 0, 0, 5};
  CHECK_THROWS_WITH_AS(validate_frame(2, wide_entry), doctest::Contains("entry exceeds world range"), FrameError);

  CHECK_THROWS_AS(validate_frame(0, std::vector<Subset::Bits>{0}), FrameError);
  CHECK_THROWS_AS(Frame::identity(17), FrameError);
}

TEST_CASE("subset algebra") {
  CHECK(S(0b101).contains(0));
  CHECK(!S(0b101).contains(1));
  CHECK(S(0b001).subset_of(S(0b101)));
  CHECK(S(0b101).complement_in(3) == S(0b010));
  CHECK(S(0b110).first() == 1);
  CHECK((S(0b110) - S(0b010)) == S(0b100));
  CHECK(Subset::full(16).bits() == 0xFFFF);
}

TEST_CASE("truth_set") {
  const Model identity(Frame::identity(2), {{"p", S(0b01)}});
  CHECK(truth_set(identity, parse("[]p")) == S(0b01));

  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    const Model any(random_frame(rng, 3), random_valuation(rng, 3, {"p", "q"}));
    CHECK(truth_set(any, parse("p & ~p")).empty());
  }

  // |[]p| = {0} and box{0} = {}.
  const Model two(two_step_frame(), {{"p", S(0b11)}});
  CHECK(truth_set(two, parse("[]p")) == S(0b01));
  CHECK(truth_set(two, parse("[][]p")).empty());

  // Unmapped variables denote the empty set.
  CHECK(truth_set(identity, parse("q")).empty());
}

TEST_CASE("holds_at") {
  const Model identity(Frame::identity(2), {{"p", S(0b01)}});
  CHECK(holds_at(identity, 0, parse("[]p")));
  CHECK(!holds_at(identity, 1, parse("[]p")));
  CHECK(holds_at(identity, 0, parse("top")));
  CHECK_THROWS_AS(holds_at(identity, 2, parse("p")), FrameError);
  CHECK_THROWS_AS(holds_at(identity, -1, parse("p")), FrameError);
}

TEST_CASE("truth_set agrees with direct recursion and respects boolean structure") {
  Rng rng(9);
  FormulaShape shape;
  shape.max_nodes = 16;
  for (int i = 0; i < 1000; ++i) {
    const int n = 1 + static_cast<int>(uniform_below(rng, 5));
    const Model m(random_frame(rng, n), random_valuation(rng, n, shape.variables));
    const Formula f = random_formula(rng, shape);
    const Formula g = random_formula(rng, shape);
    REQUIRE(truth_set(m, f) == reference::truth_set(m, f));
    CHECK(truth_set(m, Formula::neg(f)) == truth_set(m, f).complement_in(n));
    CHECK(truth_set(m, Formula::conj(f, g)) == (truth_set(m, f) & truth_set(m, g)));
    CHECK(truth_set(m, Formula::box(f)) == m.frame()(truth_set(m, f)));
  }
}

TEST_CASE("valid_on_frame") {
  CHECK(valid_on_frame(Frame::identity(2), parse("[]p -> p")));
  CHECK(valid_on_frame(Frame::identity(2), parse("p -> []p")));
  CHECK(!valid_on_frame(two_step_frame(), parse("[]p -> [][]p")));
  // Witness for the failure above: p = {0,1} refutes at world 0.
  CHECK(!holds_at(Model(two_step_frame(), {{"p", S(0b11)}}), 0, parse("[]p -> [][]p")));

  CHECK(valid_on_frame(Frame::constant(3, S(0)), parse("top")));
  CHECK_THROWS_AS(valid_on_frame(Frame::identity(9), parse("p & q & r")), GuardError);
}

TEST_CASE("property checkers") {
  for (int n = 1; n <= 4; ++n) {
    const Frame id = Frame::identity(n);
    CHECK(is_reflexive(id));
    CHECK(is_transitive(id));
    CHECK(is_monotonic(id));
    CHECK(is_regular(id));
    const Frame empty = Frame::constant(n, S(0));
    CHECK(is_reflexive(empty));
    CHECK(is_transitive(empty));
    CHECK(is_monotonic(empty));
    CHECK(is_regular(empty));
  }
  const Frame odd(1, {S(0b1), S(0)});
  CHECK(!is_monotonic(odd));
  CHECK(!is_reflexive(odd));

  // Constant-full frames are monotonic, regular, transitive but not reflexive.
  const Frame full = Frame::constant(2, S(0b11));
  CHECK(!is_reflexive(full));
  CHECK(is_transitive(full));
  CHECK(is_monotonic(full));
  CHECK(is_regular(full));
}

TEST_CASE("covering-pair monotonicity agrees with the pairwise definition") {
  Rng rng(13);
  for (int i = 0; i < 2000; ++i) {
    const int n = 1 + static_cast<int>(uniform_below(rng, 4));
    const Frame fr = (i % 2) ? random_frame(rng, n) : supplement(random_frame(rng, n));
    CHECK(is_monotonic(fr) == reference::is_monotonic(fr));
  }
}

TEST_CASE("satisfies_class") {
  CHECK(satisfies_class(Frame::identity(3), FrameClass::S04));
  CHECK(!satisfies_class(Frame(1, {S(0b1), S(0)}), FrameClass::EMC4));
  Rng rng(1);
  for (int i = 0; i < 20; ++i) CHECK(satisfies_class(random_frame(rng, 3), FrameClass::E));
  CHECK(parse_frame_class("EMC4") == FrameClass::EMC4);
  CHECK_THROWS_AS(parse_frame_class("K"), std::invalid_argument);
}

TEST_CASE("correspondence is exact on all 256 two-world frames") {
  int frames = 0;
  for (const Frame& fr : all_frames(2)) {
    const AxiomReport report = axiom_report(fr);
    CHECK_FALSE(report.mismatch());
    ++frames;
  }
  CHECK(frames == 256);
}

TEST_CASE("regularity extends to ternary intersections") {
  int regular = 0;
  for (const Frame& fr : all_frames(2)) {
    if (!is_regular(fr)) continue;
    ++regular;
    CHECK(reference::is_regular_ternary(fr));
  }
  CHECK(regular > 0);
  Rng rng(17);
  for (int i = 0; i < 3000; ++i) {
    const Frame fr = kripke_to_neighborhood(random_relation(rng, 3));
    CHECK(reference::is_regular_ternary(fr));
    const Frame g = random_frame(rng, 3);
    if (is_regular(g)) CHECK(reference::is_regular_ternary(g));
  }
}

TEST_CASE("kripke_to_neighborhood") {
  const std::vector<std::pair<int, int>> diagonal = {{0, 0}, {1, 1}};
  CHECK(kripke_to_neighborhood(2, diagonal) == Frame::identity(2));

  CHECK(kripke_to_neighborhood(1, std::vector<std::pair<int, int>>{}) == Frame(1, {S(0b1), S(0b1)}));

  // box X = ({0} if 1 in X) + {1}
  const std::vector<std::pair<int, int>> one_edge = {{0, 1}};
  CHECK(kripke_to_neighborhood(2, one_edge) == Frame(2, {S(0b10), S(0b10), S(0b11), S(0b11)}));

  const std::vector<std::pair<int, int>> bad = {{0, 2}};
  CHECK_THROWS_AS(kripke_to_neighborhood(2, bad), FrameError);
}

TEST_CASE("relational frames are monotonic and regular and inherit relational properties") {
  Rng rng(21);
  for (int i = 0; i < 2000; ++i) {
    const int n = 1 + static_cast<int>(uniform_below(rng, 5));
    const auto rel = random_relation(rng, n);
    const Frame any = kripke_to_neighborhood(rel);
    CHECK(is_monotonic(any));
    CHECK(is_regular(any));
    CHECK(is_transitive(kripke_to_neighborhood(transitive_closure(rel))));
    CHECK(is_reflexive(kripke_to_neighborhood(reflexive_closure(rel))));
  }
}

TEST_CASE("neighborhood view") {
  const Frame fr = two_step_frame();
  CHECK(fr.neighborhood(0) == std::vector<Subset>{S(0b11)});
  CHECK(fr.neighborhood(1).empty());
  CHECK_THROWS_AS(fr.neighborhood(2), FrameError);
}

TEST_CASE("model validation") {
  CHECK_THROWS_AS(Model(Frame::identity(2), {{"p", S(0b100)}}), FrameError);
  CHECK_THROWS_AS(Model(Frame::identity(2), {{"P", S(0b1)}}), FrameError);
}
