#pragma once

// Batch verification of the reproduced results. Each criterion runs a fixed,
// seeded workload, records every failed check, and is also held to a
// wall-clock budget.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "htour/classify.hpp"
#include "htour/completion.hpp"
#include "htour/core.hpp"
#include "htour/families.hpp"
#include "htour/io.hpp"
#include "htour/random.hpp"
#include "htour/ramsey.hpp"
#include "htour/report.hpp"

namespace htour::verify {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = true;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  double elapsed_ms = 0;
  double budget_ms = 0;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      failures.push_back(what);
    }
  }
};

struct Plan {
  std::vector<int> lemma_sizes{6, 7, 8};
  std::vector<int> enumeration_sizes{6, 7};
  std::vector<int> obstruction_sizes{6, 7};
  int oracle_instances = 500;
  int random_instances = 200;
  int serialization_instances = 1000;
  int hat_roundtrip_max_n = 5;
  std::uint64_t seed = 0x48345f66726565ULL;
  int jobs = 1;

  static Plan standard() { return {}; }
  static Plan quick() {
    Plan p;
    p.lemma_sizes = {6, 7};
    return p;
  }
  static Plan full() {
    Plan p;
    p.lemma_sizes = {6, 7, 8, 9};
    p.obstruction_sizes = {6, 7, 8, 9};
    return p;
  }
};

inline Plan plan_for(std::string_view level) {
  if (level == "quick") return Plan::quick();
  if (level == "full") return Plan::full();
  if (level == "standard") return Plan::standard();
  throw InputError("unknown verification level '" + std::string(level) + "'");
}

namespace detail {

inline std::string name(int n, const char* what) { return "n=" + std::to_string(n) + ": " + what; }

inline HoleyHT filled_with(const HoleyHT& A, Orientation o) {
  HoleyHT out = A;
  for (std::size_t r = 0; r < out.cells().size(); ++r)
    if (out.at_rank(r) == Orientation::Hole) out.set_rank(r, o);
  return out;
}

inline std::vector<std::vector<Vertex>> permutations_of(int n) {
  std::vector<Vertex> p(n);
  for (int i = 0; i < n; ++i) p[i] = i + 1;
  std::vector<std::vector<Vertex>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline HoleyHT with(HoleyHT A, const Triple& t, Orientation o) {
  A.set(t, o);
  return A;
}

}  // namespace detail

// `classify` stands in for four_type so a deliberately broken classifier can
// be shown to fail the check.
inline CriterionResult census_check(const std::function<FourType(const HoleyHT&)>& classify) {
  CriterionResult r{1, "four-vertex census", true, {}, {}, 0, 1000};
  std::vector<HoleyHT> all;
  const auto ts = quad_triples({1, 2, 3, 4});
  for (unsigned m = 0; m < 16; ++m) {
    HoleyHT A(4);
    for (int i = 0; i < 4; ++i) A.set(ts[i], (m >> i) & 1u ? Orientation::Plus : Orientation::Minus);
    all.push_back(A);
  }
  std::array<int, 3> counts{};
  for (const auto& A : all) ++counts[static_cast<int>(classify(A))];
  const int h4 = counts[0], o4 = counts[1], c4 = counts[2];
  r.check(h4 + o4 + c4 == 16, "census total is " + std::to_string(h4 + o4 + c4));
  r.check(h4 == 2, "H4 count " + std::to_string(h4));
  r.check(o4 == 8, "O4 count " + std::to_string(o4));
  r.check(c4 == 6, "C4 count " + std::to_string(c4));
  r.check(h4 > 0 && 24 / h4 == 12, "H4 automorphism group order is not 12");
  // Isomorphism classes by exhaustive search.
  std::vector<int> cls(16, -1);
  int classes = 0;
  for (int i = 0; i < 16; ++i) {
    if (cls[i] >= 0) continue;
    cls[i] = classes;
    for (int j = i + 1; j < 16; ++j)
      if (cls[j] < 0 && is_isomorphic(all[i], all[j])) cls[j] = classes;
    ++classes;
  }
  r.check(classes == 3, "found " + std::to_string(classes) + " isomorphism classes");
  for (int i = 0; i < 16; ++i)
    for (int j = 0; j < 16; ++j)
      r.check((cls[i] == cls[j]) == (classify(all[i]) == classify(all[j])),
              "four_type disagrees with isomorphism on structures " + std::to_string(i) + "," +
                  std::to_string(j));
  int relabelings = 0;
  for (const auto& A : all)
    for (const auto& p : detail::permutations_of(4)) {
      ++relabelings;
      r.check(classify(relabel(A, p)) == classify(A), "four_type not relabeling-invariant");
    }
  r.notes.push_back(std::to_string(relabelings) + " relabelings checked");
  return r;
}

inline CriterionResult census_criterion(const Plan&) {
  CriterionResult r = census_check([](const HoleyHT& A) { return four_type(A); });
  const Census4 c = census4();
  r.check(c.total == 16 && c.count(FourType::H4) == 2 && c.count(FourType::O4) == 8 &&
              c.count(FourType::C4) == 6,
          "census4() disagrees with the per-structure counts");
  return r;
}

inline CriterionResult forcing_criterion(const Plan&) {
  CriterionResult r{2, "forcing gadgets", true, {}, {}, 0, 1000};
  const auto h4_free = ConstraintSet::h4_free();
  const Triple t123{1, 2, 3}, t234{2, 3, 4}, t134{1, 3, 4};

  auto h4_assignments = [&](const HoleyHT& g, const Triple& h1, const Triple& h2) {
    std::vector<std::pair<Orientation, Orientation>> out;
    for (Orientation a : {Orientation::Plus, Orientation::Minus})
      for (Orientation b : {Orientation::Plus, Orientation::Minus}) {
        HoleyHT A = detail::with(detail::with(g, h1, a), h2, b);
        if (four_type(A) == FourType::H4) out.emplace_back(a, b);
      }
    return out;
  };

  const HoleyHT G = gadget(LinkKind::Fwd);
  const auto g_bad = h4_assignments(G, t123, t234);
  r.check(g_bad.size() == 1 && g_bad[0] == std::pair{Orientation::Plus, Orientation::Minus},
          "G: (123 Plus, 234 Minus) is not the unique H4 assignment");
  r.check(all_completions(G, h4_free).size() == 3, "G does not have exactly 3 completions");

  const HoleyHT Gn = gadget(LinkKind::FwdNeg);
  const auto gn_bad = h4_assignments(Gn, t123, t134);
  r.check(std::find(gn_bad.begin(), gn_bad.end(),
                    std::pair{Orientation::Plus, Orientation::Plus}) != gn_bad.end(),
          "G¬: (123 Plus, 134 Plus) does not form H4");

  const auto pg = propagate(detail::with(G, t123, Orientation::Plus), h4_free);
  r.check(pg.ok() && pg.structure.at(t234) == Orientation::Plus, "propagate: 123 does not force 234");
  const auto pgn = propagate(detail::with(Gn, t123, Orientation::Plus), h4_free);
  r.check(pgn.ok() && pgn.structure.at(t134) == Orientation::Minus,
          "propagate: 123 does not force ¬134 in G¬");
  const auto idle = propagate(G, h4_free);
  r.check(idle.ok() && idle.structure == G, "propagate changes G without a decision");
  return r;
}

inline CriterionResult lemma_criterion(const Plan& plan) {
  CriterionResult r{3, "chain lemma for O_n and its dual", true, {}, {}, 0, 30000};
  const auto h4_free = ConstraintSet::h4_free();
  const Triple t123{1, 2, 3};
  for (int n : plan.lemma_sizes) {
    for (bool dual : {false, true}) {
      const char* tag = dual ? "O_n¬" : "O_n";
      const HoleyHT O = dual ? gen_onneg(n) : gen_on(n);
      const Orientation forced = dual ? Orientation::Plus : Orientation::Minus;

      // (a) completable, and the default filling works.
      r.check(complete(O, h4_free).sat(), detail::name(n, tag) + std::string(" has no completion"));
      const HoleyHT filled = detail::filled_with(O, dual ? Orientation::Plus : Orientation::Minus);
      const Membership fm = class_member(filled, h4_free);
      std::string where;
      if (!fm.member) {
        const auto& q = *fm.witness;
        where = " (H4 on " + std::to_string(q[0]) + "," + std::to_string(q[1]) + "," +
                std::to_string(q[2]) + "," + std::to_string(q[3]) + ")";
      }
      r.check(fm.member, detail::name(n, tag) + std::string(" default hole filling is not a completion") + where);

      // (b) every completion fixes {1,2,3}.
      if (std::find(plan.enumeration_sizes.begin(), plan.enumeration_sizes.end(), n) !=
          plan.enumeration_sizes.end()) {
        const auto all = all_completions(O, h4_free);
        r.check(!all.empty(), detail::name(n, tag) + std::string(" enumeration found nothing"));
        for (const auto& c : all)
          if (c.at(t123) != forced) {
            r.check(false, detail::name(n, tag) + std::string(" completion with the wrong {1,2,3}"));
            break;
          }
        r.notes.push_back(detail::name(n, tag) + std::string(" completions: ") + std::to_string(all.size()));
      }

      // (c) each deletion of v >= 4 admits the opposite value on {1,2,3}.
      for (Vertex v = 4; v <= n; ++v) {
        const std::string what = detail::name(n, tag) + std::string(" minus ") + std::to_string(v);
        try {
          const HoleyHT seeded = seeded_deletion(n, v, dual);
          r.check(seeded.at(t123) == reversed(forced), what + ": seed does not flip {1,2,3}");
          r.check(class_member(seeded, h4_free).member, what + ": seed creates an H4");
          r.check(complete(seeded, h4_free).sat(), what + ": seeded structure has no completion");
        } catch (const ChainInconsistent& e) {
          r.check(false, what + ": " + e.what());
        }
      }
    }
  }
  return r;
}

inline CriterionResult obstruction_criterion(const Plan& plan) {
  CriterionResult r{4, "B_n is a minimal obstruction", true, {}, {}, 0, 60000};
  for (int n : plan.obstruction_sizes) {
    const HoleyHT B = gen_bn(n);
    r.check(B.size() == 2 * n - 3, detail::name(n, "B_n has the wrong vertex count"));
    const ObstructionReport rep = is_minimal_obstruction(B, ConstraintSet::h4_free(), plan.jobs);
    r.check(!rep.whole.sat(), detail::name(n, "B_n has a completion"));
    std::string failing;
    for (std::size_t i = 0; i < rep.deletions.size(); ++i)
      if (!rep.deletions[i].sat()) failing += " " + std::to_string(i + 1);
    r.check(failing.empty(), detail::name(n, "deletions without completion:") + failing);
    r.notes.push_back(detail::name(n, "search decisions on B_n: ") +
                      std::to_string(rep.whole.stats.decisions));
  }
  return r;
}

inline CriterionResult oracle_criterion(const Plan& plan) {
  CriterionResult r{5, "solver agrees with exhaustive enumeration", true, {}, {}, 0, 60000};
  Rng rng(plan.seed + 5);
  int sat = 0, forced_checked = 0;
  for (int i = 0; i < plan.oracle_instances; ++i) {
    const int n = uniform_int(rng, 4, 7);
    const auto holes = static_cast<std::size_t>(uniform_int(rng, 0, 12));
    const HoleyHT A = random_near_member(rng, n, holes);
    const ConstraintSet allowed = random_constraint_set(rng);
    const auto all = all_completions(A, allowed);
    const bool solver = complete(A, allowed).sat();
    sat += solver;
    r.check(solver == !all.empty(), "instance " + std::to_string(i) + ": verdict mismatch");
    const auto p = propagate(A, allowed);
    if (!p.ok()) {
      r.check(all.empty(), "instance " + std::to_string(i) + ": propagation conflict on a completable input");
      continue;
    }
    for (const auto& f : p.forced) {
      ++forced_checked;
      for (const auto& c : all)
        if (c.at(f.triple) != f.value) {
          r.check(false, "instance " + std::to_string(i) + ": forced value missing from a completion");
          break;
        }
    }
  }
  r.notes.push_back(std::to_string(sat) + "/" + std::to_string(plan.oracle_instances) +
                    " satisfiable, " + std::to_string(forced_checked) + " forced values checked");
  return r;
}

inline OrderedHT ordered_cyclic(int n) {
  const auto ord = LinearOrder::natural(n);
  return expand(gen_cyclic(ord), ExpansionKind::Cyclic, ord);
}

inline CriterionResult ramsey_criterion(const Plan& plan) {
  CriterionResult r{6, "ordered expansions and arrow checks", true, {}, {}, 0, 120000};
  const OrderedHT pair = ordered_cyclic(2), tri = ordered_cyclic(3);

  const ArrowVerdict six = arrow_check(ordered_cyclic(6), tri, pair);
  r.check(six.holds, "6-vertex cyclic does not arrow (3)^2");
  r.check(six.a_embeddings.size() == 15, "expected 15 pair embeddings into 6 vertices");

  const ArrowVerdict five = arrow_check(ordered_cyclic(5), tri, pair);
  r.check(!five.holds && five.counterexample, "5-vertex cyclic arrows (3)^2");
  if (five.counterexample) {
    // Independent check: colour pairs of 1..5 and look for a monochromatic triangle.
    std::map<std::pair<Vertex, Vertex>, int> colour;
    for (std::size_t i = 0; i < five.a_embeddings.size(); ++i) {
      auto e = five.a_embeddings[i];
      std::sort(e.begin(), e.end());
      colour[{e[0], e[1]}] = (*five.counterexample)[i];
    }
    bool mono = false;
    for (Vertex a = 1; a <= 5; ++a)
      for (Vertex b = a + 1; b <= 5; ++b)
        for (Vertex c = b + 1; c <= 5; ++c)
          mono |= colour[{a, b}] == colour[{a, c}] && colour[{a, c}] == colour[{b, c}];
    r.check(!mono, "counterexample colouring has a monochromatic triangle");
  }

  Rng rng(plan.seed + 6);
  for (int n = 3; n <= 7; ++n) {
    const HoleyHT A = gen_cyclic(random_order(rng, n));
    const auto orders = compatible_orders_cyclic(A);
    r.check(static_cast<int>(orders.size()) == n,
            detail::name(n, "compatible cyclic orders count differs from n"));
    std::vector<Vertex> least;
    for (const auto& o : orders) least.push_back(o.perm().front());
    std::sort(least.begin(), least.end());
    r.check(std::adjacent_find(least.begin(), least.end()) == least.end(),
            detail::name(n, "two compatible orders share a least element"));
  }

  for (int i = 0; i < plan.random_instances; ++i) {
    const int n = uniform_int(rng, 1, 9);
    const HoleyHT E = gen_even(random_graph(rng, n), random_order(rng, n));
    r.check(class_member(E, ConstraintSet::even()).member,
            "even structure " + std::to_string(i) + " leaves the even class");
  }
  for (int i = 0; i < plan.random_instances; ++i) {
    const int n = uniform_int(rng, 1, 9);
    const HoleyHT A = random_holey(rng, n, static_cast<std::size_t>(uniform_int(rng, 0, 40)));
    r.check(complete(A, ConstraintSet::all()).sat(),
            "holey instance " + std::to_string(i) + " has no completion in the unconstrained class");
  }
  return r;
}

inline CriterionResult invariants_criterion(const Plan& plan) {
  CriterionResult r{7, "structural invariants", true, {}, {}, 0, 60000};

  // hat/unhat, exhaustive over structures and orders.
  for (int n = 0; n <= plan.hat_roundtrip_max_n; ++n) {
    const auto triples = all_triples(n);
    const auto orders = detail::permutations_of(n);
    const std::uint64_t count = std::uint64_t{1} << triples.size();
    bool ok = true;
    for (std::uint64_t m = 0; m < count && ok; ++m) {
      HoleyHT A(n);
      Hypergraph3 H{n, {}};
      for (std::size_t i = 0; i < triples.size(); ++i) {
        const bool bit = (m >> i) & 1u;
        A.set(triples[i], bit ? Orientation::Plus : Orientation::Minus);
        if (bit) H.hyperedges.push_back(triples[i]);
      }
      for (const auto& p : orders) {
        const LinearOrder ord(p);
        ok = ok && unhat(hat(A, ord), ord) == A && hat(unhat(H, ord), ord) == H;
      }
    }
    r.check(ok, detail::name(n, "hat/unhat round trip fails"));
  }

  // Restriction of completions.
  Rng rng(plan.seed + 7);
  int restricted = 0;
  for (int attempt = 0; restricted < plan.random_instances && attempt < 50 * plan.random_instances;
       ++attempt) {
    const int n = uniform_int(rng, 4, 8);
    const HoleyHT A = random_near_member(rng, n, static_cast<std::size_t>(uniform_int(rng, 0, 16)));
    const ConstraintSet allowed = random_constraint_set(rng);
    const SolveResult s = complete(A, allowed);
    if (!s.sat()) continue;
    ++restricted;
    std::vector<Vertex> subset;
    for (Vertex v = 1; v <= n; ++v)
      if (uniform_int(rng, 0, 1)) subset.push_back(v);
    if (subset.empty()) subset.push_back(uniform_int(rng, 1, n));
    const HoleyHT part = induced(A, subset), cpart = induced(*s.completion, subset);
    bool ok = cpart.is_full() && class_member(cpart, allowed).member;
    for (std::size_t k = 0; ok && k < part.cells().size(); ++k)
      ok = part.at_rank(k) == Orientation::Hole || part.at_rank(k) == cpart.at_rank(k);
    r.check(ok, "restriction of a completion is not a completion");
  }
  r.check(restricted == plan.random_instances, "too few completable random instances");

  // Serialization.
  for (int i = 0; i < plan.serialization_instances; ++i) {
    const int n = uniform_int(rng, 0, 9);
    const HoleyHT A = random_holey(rng, n, static_cast<std::size_t>(uniform_int(rng, 0, 84)));
    const std::string text = emit_htfile(A);
    const HTDocument back = parse_htfile(text);
    r.check(back.ht == A && emit_htfile(back) == text, "serialization round trip " + std::to_string(i));
  }

  // Reports do not depend on the worker count, and a text round trip
  // changes nothing.
  const HoleyHT B = gen_bn(7);
  const std::string one = render(report_minimal_obstruction(B, ConstraintSet::h4_free(), 1));
  const std::string eight = render(report_minimal_obstruction(B, ConstraintSet::h4_free(), 8));
  r.check(one == eight, "minimal-obstruction report differs between jobs=1 and jobs=8");
  const ArrowOptions serial{}, parallel{false, false, 8};
  r.check(render(report_ramsey(ordered_cyclic(5), ordered_cyclic(3), ordered_cyclic(2), serial)) ==
              render(report_ramsey(ordered_cyclic(5), ordered_cyclic(3), ordered_cyclic(2), parallel)),
          "ramsey report differs between jobs=1 and jobs=8");
  const HoleyHT piped = parse_htfile(emit_htfile(gen_bn(6))).ht;
  r.check(render(report_complete(piped, ConstraintSet::h4_free())) ==
              render(report_complete(gen_bn(6), ConstraintSet::h4_free())),
          "piped and in-process completion reports differ");
  return r;
}

using CriterionFn = std::function<CriterionResult(const Plan&)>;

inline const std::vector<CriterionFn>& criteria() {
  static const std::vector<CriterionFn> all{census_criterion,      forcing_criterion,
                                            lemma_criterion,       obstruction_criterion,
                                            oracle_criterion,      ramsey_criterion,
                                            invariants_criterion};
  return all;
}

inline CriterionResult run_criterion(int id, const Plan& plan) {
  if (id < 1 || id > static_cast<int>(criteria().size())) {
    throw InputError("no criterion " + std::to_string(id));
  }
  const auto t0 = std::chrono::steady_clock::now();
  CriterionResult r = criteria()[id - 1](plan);
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  r.check(r.elapsed_ms <= r.budget_ms, "runtime over budget");
  return r;
}

inline std::vector<CriterionResult> run_all(const Plan& plan) {
  std::vector<CriterionResult> out;
  for (int i = 1; i <= static_cast<int>(criteria().size()); ++i) out.push_back(run_criterion(i, plan));
  return out;
}

inline std::string summary_line(const CriterionResult& r) {
  std::string s = std::string(r.passed ? "PASS" : "FAIL") + "  [" + std::to_string(r.id) + "] " +
                  r.title + "  (" + std::to_string(static_cast<long long>(r.elapsed_ms)) + " ms)";
  return s;
}

inline Json results_json(const std::vector<CriterionResult>& results, bool timing) {
  Json items = Json::array();
  for (const auto& r : results) {
    Json j;
    j["id"] = r.id;
    j["title"] = r.title;
    j["passed"] = r.passed;
    j["failures"] = r.failures;
    j["notes"] = r.notes;
    j["elapsed_ms"] = timing ? Json(r.elapsed_ms) : Json(nullptr);
    j["budget_ms"] = r.budget_ms;
    items.push_back(std::move(j));
  }
  return items;
}

}  // namespace htour::verify
