#include "nbhd/suites.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <stdexcept>

#include "nbhd/decide.hpp"
#include "nbhd/filtration.hpp"
#include "nbhd/generate.hpp"
#include "nbhd/io.hpp"
#include "nbhd/reference.hpp"
#include "nbhd/transform.hpp"

namespace nbhd::suites {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Accumulates checks into a Result and keeps the first failure description.
class Tally {
 public:
  Tally(Result& r) : r_(r) {}

  bool check(bool ok, const std::function<std::string()>& describe) {
    ++r_.checks;
    if (!ok && r_.failures++ == 0) r_.detail = describe();
    return ok;
  }

 private:
  Result& r_;
};

std::size_t scaled(Level level, std::size_t full) { return level == Level::full ? full : (full + 9) / 10; }

Rng suite_rng(std::uint64_t seed, int id) { return Rng(seed ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(id))); }

std::vector<Frame> all_frames(int n) {
  std::vector<Frame> out;
  const std::size_t entries = std::size_t{1} << n;
  const std::uint64_t total = std::uint64_t{1} << (n * entries);
  std::vector<Subset> box(entries);
  for (std::uint64_t code = 0; code < total; ++code) {
    for (std::size_t m = 0; m < entries; ++m) {
      box[m] = Subset(static_cast<Subset::Bits>(code >> (m * n))) & Subset::full(n);
    }
    out.emplace_back(n, box);
  }
  return out;
}

std::string show(const Frame& f) { return frame_to_json(f); }
std::string show(const Model& m) { return model_to_json(m); }

Result start(int id, const char* name, double time_limit = 0) {
  Result r;
  r.id = id;
  r.name = name;
  r.time_limit = time_limit;
  return r;
}

void finish(Result& r, Clock::time_point t0, std::string summary) {
  r.seconds = seconds_since(t0);
  if (r.failures == 0) r.detail = std::move(summary);
}

std::vector<std::string> first_variables(std::size_t k) {
  static const std::vector<std::string> all = {"p", "q", "r"};
  return {all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k)};
}

bool class_satisfies(const Frame& f, bool transitive, bool monotonic, bool regular) {
  return (!transitive || is_transitive(f)) && (!monotonic || is_monotonic(f)) && (!regular || is_regular(f));
}

}  // namespace

Level parse_level(std::string_view name) {
  if (name == "quick") return Level::quick;
  if (name == "full") return Level::full;
  throw std::invalid_argument("unknown level '" + std::string(name) + "'");
}

Result correspondence_suite(Level, std::uint64_t) {
  Result r = start(1, "correspondence", 10.0);
  Tally t(r);
  const auto t0 = Clock::now();
  std::size_t frames = 0;
  std::map<std::string, std::size_t> holding;
  for (int n = 1; n <= 2; ++n) {
    for (const Frame& fr : all_frames(n)) {
      ++frames;
      const AxiomReport report = axiom_report(fr);
      for (const auto& row : report.rows) {
        if (row.holds) ++holding[row.axiom];
        t.check(!row.mismatch(), [&] { return "axiom " + row.axiom + " disagrees with its property on " + show(fr); });
      }
    }
  }
  std::string summary = std::to_string(frames) + " frames at n<=2;";
  for (const auto& [axiom, count] : holding) summary += " " + axiom + ":" + std::to_string(count);
  finish(r, t0, summary);
  return r;
}

Result supplementation_suite(Level level, std::uint64_t seed) {
  Result r = start(2, "supplementation", 60.0);
  Tally t(r);
  Rng rng = suite_rng(seed, 2);
  const auto t0 = Clock::now();
  const std::size_t count = scaled(level, 10000);
  std::map<FrameProperty, std::size_t> preserved;

  auto check_preserved = [&](const Frame& fr, const Frame& sup) {
    for (const FrameProperty p : kAllProperties) {
      if (!has_property(fr, p)) continue;
      ++preserved[p];
      t.check(has_property(sup, p), [&] { return std::string(to_string(p)) + " lost by supplement on " + show(fr); });
    }
  };

  for (std::size_t i = 0; i < count; ++i) {
    const int n = 2 + static_cast<int>(i % 3);
    const Frame fr = random_frame(rng, n);
    const Frame sup = supplement(fr);
    t.check(is_monotonic(sup), [&] { return "supplement not monotonic on " + show(fr); });
    if (n <= 3) t.check(sup == reference::supplement(fr), [&] { return "supplement differs from oracle on " + show(fr); });
    check_preserved(fr, sup);

    const Frame constructed[] = {
        random_reflexive_frame(rng, n),
        (i % 2) ? grow_until_transitive(random_frame(rng, n)) : hat_closure(random_frame(rng, n)),
        intersection_closure(random_frame(rng, n)),
        kripke_to_neighborhood(reflexive_closure(transitive_closure(random_relation(rng, n)))),
    };
    for (const Frame& c : constructed) check_preserved(c, supplement(c));
  }
  std::string summary = std::to_string(count) + " random frames;";
  for (const auto& [p, k] : preserved) summary += " " + std::string(to_string(p)) + ":" + std::to_string(k);
  finish(r, t0, summary);
  return r;
}

Result commutation_suite(Level level, std::uint64_t seed) {
  Result r = start(3, "commutation");
  Tally t(r);
  Rng rng = suite_rng(seed, 3);
  const auto t0 = Clock::now();
  auto check = [&](const Frame& fr) {
    t.check(supplement(intersection_closure(fr)) == intersection_closure(supplement(fr)),
            [&] { return "closures do not commute on " + show(fr); });
  };
  for (const Frame& fr : all_frames(2)) check(fr);
  const std::size_t count = scaled(level, 2000);
  for (std::size_t i = 0; i < count; ++i) check(random_frame(rng, 3 + static_cast<int>(i % 2)));
  finish(r, t0, "256 frames at n=2, " + std::to_string(count) + " samples at n=3,4");
  return r;
}

Result intersection_closure_suite(Level level, std::uint64_t seed) {
  Result r = start(4, "intersection closure");
  Tally t(r);
  Rng rng = suite_rng(seed, 4);
  const auto t0 = Clock::now();
  const std::size_t count = scaled(level, 500);
  for (std::size_t i = 0; i < count; ++i) {
    const int n = 1 + static_cast<int>(i % 3);
    const Frame fr = (i % 4 == 3) ? random_reflexive_frame(rng, n) : random_frame(rng, n);
    const Frame star = intersection_closure(fr);
    t.check(is_regular(star), [&] { return "intersection closure not regular on " + show(fr); });
    t.check(star == reference::intersection_closure(fr), [&] { return "fast closure differs from oracle on " + show(fr); });
  }
  finish(r, t0, std::to_string(count) + " frames at n<=3");
  return r;
}

Result filtration_theorem_suite(Level level, std::uint64_t seed) {
  Result r = start(5, "filtration theorem");
  Tally t(r);
  Rng rng = suite_rng(seed, 5);
  const auto t0 = Clock::now();
  const std::size_t count = scaled(level, 1000);
  std::map<FiltrationKind, std::size_t> applied;

  for (std::size_t i = 0; i < count; ++i) {
    const int n = 1 + static_cast<int>(uniform_below(rng, 5));
    Frame frame = Frame::identity(n);
    switch (i % 4) {
      case 0:
        frame = random_frame(rng, n);
        break;
      case 1:
        frame = kripke_to_neighborhood(transitive_closure(random_relation(rng, n)));
        break;
      case 2:
        frame = supplement(hat_closure(random_frame(rng, n)));
        break;
      default:
        frame = grow_until_transitive(random_frame(rng, n));
        break;
    }
    FormulaShape shape;
    shape.variables = first_variables(1 + uniform_below(rng, 3));
    shape.max_depth = 3;
    const Model m(std::move(frame), random_valuation(rng, n, shape.variables));
    const Formula f = random_formula(rng, shape);
    t.check(modal_depth(f) <= 3, [&] { return "generated formula too deep: " + render(f); });
    const SigmaSet sigma = subformula_closure(f);

    const bool transitive = is_transitive(m.frame());
    const bool monotonic = is_monotonic(m.frame());
    const bool regular = is_regular(m.frame());
    std::vector<FiltrationKind> kinds = {FiltrationKind::minimal};
    if (transitive) kinds.push_back(FiltrationKind::transitive);
    if (transitive && monotonic) kinds.push_back(FiltrationKind::s04);
    if (transitive && monotonic && regular) kinds.push_back(FiltrationKind::emc4);

    for (const FiltrationKind kind : kinds) {
      ++applied[kind];
      const FiltrationResult fr = filtrate(m, sigma, kind);
      const FiltrationReport report = verify_filtration(m, fr);
      t.check(report.passed(), [&] {
        const CheckResult* bad = report.first_failure();
        return std::string(to_string(kind)) + " filtration of " + show(m) + " through Sub(" + render(f) +
               ") fails: " + bad->detail;
      });
      if (sigma.size() < 31) {
        t.check(fr.model.worlds() <= (1 << sigma.size()), [&] { return "too many classes for " + render(f); });
      }
    }
  }
  std::string summary = std::to_string(count) + " pairs;";
  for (const FiltrationKind k : {FiltrationKind::minimal, FiltrationKind::transitive, FiltrationKind::s04,
                                 FiltrationKind::emc4}) {
    t.check(applied[k] > 0, [&] { return std::string("no source admitted the ") + std::string(to_string(k)) + " kind"; });
    summary += " " + std::string(to_string(k)) + ":" + std::to_string(applied[k]);
  }
  finish(r, t0, summary);
  return r;
}

Result transitive_filtration_suite(Level level, std::uint64_t seed) {
  Result r = start(6, "transitive filtration");
  Tally t(r);
  Rng rng = suite_rng(seed, 6);
  const auto t0 = Clock::now();
  const std::size_t count = scaled(level, 500);
  for (std::size_t i = 0; i < count; ++i) {
    const int n = 1 + static_cast<int>(uniform_below(rng, 5));
    const Formula f = random_formula(rng, {});
    const SigmaSet sigma = subformula_closure(f);

    const Model trans(kripke_to_neighborhood(transitive_closure(random_relation(rng, n))),
                      random_valuation(rng, n, {"p", "q", "r"}));
    const FiltrationResult ft = transitive_filtration(trans, sigma);
    t.check(is_transitive(ft.model.frame()), [&] { return "not transitive: " + show(trans) + " / " + render(f); });
    t.check(verify_filtration(trans, ft).passed(), [&] { return "not a filtration: " + show(trans) + " / " + render(f); });

    const Model refl(kripke_to_neighborhood(reflexive_closure(random_relation(rng, n))),
                     random_valuation(rng, n, {"p", "q", "r"}));
    const FiltrationResult fr = transitive_filtration(refl, sigma);
    t.check(is_reflexive(fr.model.frame()), [&] { return "not reflexive: " + show(refl) + " / " + render(f); });
  }
  finish(r, t0, std::to_string(count) + " transitive and " + std::to_string(count) + " reflexive models");
  return r;
}

Result closure_pipelines_suite(Level level, std::uint64_t seed) {
  Result r = start(7, "emc4 and s04 pipelines");
  Tally t(r);
  Rng rng = suite_rng(seed, 7);
  const auto t0 = Clock::now();
  const std::size_t count = scaled(level, 500);
  for (std::size_t i = 0; i < count; ++i) {
    const int n = 1 + static_cast<int>(uniform_below(rng, 5));
    const bool reflexive = i % 2 == 1;
    auto rel = transitive_closure(random_relation(rng, n));
    if (reflexive) rel = reflexive_closure(rel);
    const Model m(kripke_to_neighborhood(rel), random_valuation(rng, n, {"p", "q", "r"}));
    const Formula f = random_formula(rng, {});
    const SigmaSet sigma = subformula_closure(f);
    auto where = [&] { return show(m) + " / " + render(f); };

    const FiltrationResult emc4 = emc4_filtration(m, sigma);
    const Frame& e = emc4.model.frame();
    t.check(class_satisfies(e, true, true, true), [&] { return "emc4 frame lacks a property: " + where(); });
    t.check(verify_filtration(m, emc4).passed(), [&] { return "emc4 is not a filtration: " + where(); });

    const FiltrationResult s04 = s04_filtration(m, sigma);
    const Frame& s = s04.model.frame();
    t.check(class_satisfies(s, true, true, false), [&] { return "s04 frame lacks a property: " + where(); });
    if (reflexive) t.check(is_reflexive(s), [&] { return "s04 frame not reflexive: " + where(); });
    t.check(verify_filtration(m, s04).passed(), [&] { return "s04 is not a filtration: " + where(); });
  }
  finish(r, t0, std::to_string(count) + " Kripke sources, half reflexive");
  return r;
}

Result search_sanity_suite(Level, std::uint64_t seed) {
  Result r = start(8, "bounded search");
  Tally t(r);
  const auto t0 = Clock::now();
  const Formula f = parse("[]p & ~[][]p");
  SearchConfig cfg;
  cfg.seed = seed;

  const auto e0 = Clock::now();
  const SatResult e = bounded_sat(f, FrameClass::E, cfg);
  const double e_seconds = seconds_since(e0);
  if (t.check(e.satisfiable(), [] { return std::string("no E witness found"); })) {
    const Satisfiable& w = e.witness();
    t.check(w.model.worlds() <= 2, [&] { return "E witness too large: " + show(w.model); });
    t.check(holds_at(w.model, w.world, f) && satisfies_class(w.model.frame(), FrameClass::E),
            [&] { return "E witness does not verify: " + show(w.model); });
  }
  t.check(e_seconds < 1.0, [&] { return "E search took " + std::to_string(e_seconds) + " s"; });

  const SatResult e4 = bounded_sat(f, FrameClass::E4, cfg);
  std::uint64_t examined = 0;
  std::uint64_t in_class = 0;
  if (t.check(!e4.satisfiable(), [&] { return "E4 witness found: " + show(e4.witness().model); })) {
    examined = e4.unknown().frames_examined;
    in_class = e4.unknown().frames_in_class;
    t.check(examined >= 100000, [&] { return "only " + std::to_string(examined) + " candidates examined"; });
    t.check(in_class > 0, [] { return std::string("no transitive candidate was generated"); });
  }
  char buffer[160];
  std::snprintf(buffer, sizeof buffer, "E witness in %.3f s; E4 unknown after %llu candidates (%llu transitive)",
                e_seconds, static_cast<unsigned long long>(examined), static_cast<unsigned long long>(in_class));
  finish(r, t0, buffer);
  return r;
}

Result finite_models_suite(Level level, std::uint64_t seed) {
  Result r = start(9, "finite model property");
  Tally t(r);
  Rng rng = suite_rng(seed, 9);
  const auto t0 = Clock::now();
  const std::size_t wanted = scaled(level, 100);

  // All formulas over p, q, r with at most five nodes, in subformula order.
  std::vector<std::vector<Formula>> by_size(6);
  for (const auto& v : first_variables(3)) by_size[1].push_back(Formula::var(v));
  for (std::size_t size = 2; size <= 5; ++size) {
    for (const Formula& g : by_size[size - 1]) {
      by_size[size].push_back(Formula::neg(g));
      by_size[size].push_back(Formula::box(g));
    }
    for (std::size_t a = 1; a + 1 < size; ++a) {
      for (const Formula& g : by_size[a]) {
        for (const Formula& h : by_size[size - 1 - a]) by_size[size].push_back(Formula::conj(g, h));
      }
    }
  }

  SearchConfig cfg;
  cfg.seed = seed;
  cfg.sample_budget = 500;
  std::size_t found = 0;
  std::size_t large_witnesses = 0;
  std::size_t global_truths = 0;
  for (std::size_t size = 1; size <= 5 && found < wanted; ++size) {
    for (const Formula& f : by_size[size]) {
      if (found >= wanted) break;
      const SigmaSet sigma = subformula_closure(f);
      if (sigma.size() > 4) continue;
      const SatResult sat = bounded_sat(f, FrameClass::E4, cfg);
      if (!sat.satisfiable()) continue;
      ++found;
      const Model& m = sat.witness().model;
      auto where = [&] { return render(f) + " on " + show(m); };

      // The smallest witness, and a larger one when sampling finds it.
      SearchConfig wide = cfg;
      wide.min_worlds = 4;
      wide.max_worlds = 5;
      wide.exhaustive_limit = 0;
      const SatResult large = bounded_sat(f, FrameClass::E4, wide);
      std::vector<const Satisfiable*> witnesses = {&sat.witness()};
      if (large.satisfiable()) {
        witnesses.push_back(&large.witness());
        ++large_witnesses;
      }
      for (const Satisfiable* w : witnesses) {
        auto where = [&] { return render(f) + " on " + show(w->model); };
        const FiltrationResult fr = transitive_filtration(w->model, sigma);
        t.check(verify_filtration(w->model, fr).passed(), [&] { return "not a filtration: " + where(); });
        t.check(satisfies_class(fr.model.frame(), FrameClass::E4), [&] { return "filtered frame not E4: " + where(); });
        t.check(fr.model.worlds() <= (1 << sigma.size()), [&] { return "filtered model too large: " + where(); });
        t.check(holds_at(fr.model, fr.partition.class_of(w->world), f),
                [&] { return "formula lost at the witness class: " + where(); });
      }

      // Variable-free formulas true everywhere stay true everywhere.
      for (int attempt = 0, kept = 0; attempt < 30 && kept < 3; ++attempt) {
        const Formula psi = random_variable_free_formula(rng, 3, 10);
        if (truth_set(m, psi) != m.frame().universe()) continue;
        ++kept;
        ++global_truths;
        const Formula roots[] = {f, psi};
        const SigmaSet wider = subformula_closure(roots);
        for (const FiltrationKind kind : {FiltrationKind::minimal, FiltrationKind::transitive}) {
          const FiltrationResult g = filtrate(m, wider, kind);
          t.check(truth_set(g.model, psi) == g.model.frame().universe(),
                  [&] { return "global truth " + render(psi) + " lost: " + where(); });
        }
      }
    }
  }
  t.check(found == wanted, [&] { return "only " + std::to_string(found) + " satisfiable formulas found"; });
  t.check(global_truths > 0, [] { return std::string("no variable-free global truth was sampled"); });
  finish(r, t0,
         std::to_string(found) + " E4-satisfiable formulas (" + std::to_string(large_witnesses) +
             " also with 4-5 world witnesses), " + std::to_string(global_truths) + " variable-free global truths");
  return r;
}

std::span<const Suite> all_suites() {
  static const Suite suites[] = {
      {1, "correspondence", correspondence_suite},
      {2, "supplementation", supplementation_suite},
      {3, "commutation", commutation_suite},
      {4, "intersection closure", intersection_closure_suite},
      {5, "filtration theorem", filtration_theorem_suite},
      {6, "transitive filtration", transitive_filtration_suite},
      {7, "emc4 and s04 pipelines", closure_pipelines_suite},
      {8, "bounded search", search_sanity_suite},
      {9, "finite model property", finite_models_suite},
  };
  return suites;
}

std::vector<Result> run_all(Level level, std::uint64_t seed) {
  std::vector<Result> out;
  for (const Suite& s : all_suites()) {
    try {
      out.push_back(s.run(level, seed));
    } catch (const std::exception& e) {
      Result r = start(s.id, s.name);
      r.failures = 1;
      r.detail = std::string("exception: ") + e.what();
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::string format(const Result& r) {
  char head[160];
  std::snprintf(head, sizeof head, "[%s] %d %s: %llu checks, %llu failures, %.2f s", r.passed() ? "PASS" : "FAIL",
                r.id, r.name.c_str(), static_cast<unsigned long long>(r.checks),
                static_cast<unsigned long long>(r.failures), r.seconds);
  std::string line = head;
  if (r.time_limit > 0) {
    char limit[48];
    std::snprintf(limit, sizeof limit, " (limit %.0f s%s)", r.time_limit, r.within_time() ? "" : ", exceeded");
    line += limit;
  }
  if (!r.detail.empty()) line += "; " + r.detail;
  return line;
}

}  // namespace nbhd::suites
