#pragma once

// Seeded instance generators for the property drivers.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "htour/classify.hpp"
#include "htour/core.hpp"
#include "htour/families.hpp"

namespace htour {

using Rng = std::mt19937_64;

inline int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline LinearOrder random_order(Rng& rng, int n) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 1);
  std::shuffle(p.begin(), p.end(), rng);
  return LinearOrder(std::move(p));
}

inline SimpleGraph random_graph(Rng& rng, int n, double density = 0.5) {
  SimpleGraph g(n);
  std::bernoulli_distribution coin(density);
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline HoleyHT random_full(Rng& rng, int n) {
  HoleyHT A(n);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t r = 0; r < A.cells().size(); ++r)
    A.set_rank(r, coin(rng) ? Orientation::Plus : Orientation::Minus);
  return A;
}

// Turns `holes` distinct random triples (capped at the triple count) into holes.
inline void punch_holes(Rng& rng, HoleyHT& A, std::size_t holes) {
  std::vector<std::size_t> ranks(A.cells().size());
  std::iota(ranks.begin(), ranks.end(), 0);
  std::shuffle(ranks.begin(), ranks.end(), rng);
  holes = std::min(holes, ranks.size());
  for (std::size_t i = 0; i < holes; ++i) A.set_rank(ranks[i], Orientation::Hole);
}

inline HoleyHT random_holey(Rng& rng, int n, std::size_t holes) {
  HoleyHT A = random_full(rng, n);
  punch_holes(rng, A, holes);
  return A;
}

// A mix of instances near the interesting classes: a cyclic or even base
// structure, a few reversed triples, then holes.
inline HoleyHT random_near_member(Rng& rng, int n, std::size_t holes) {
  HoleyHT A;
  switch (uniform_int(rng, 0, 2)) {
    case 0: A = gen_cyclic(random_order(rng, n)); break;
    case 1: A = gen_even(random_graph(rng, n), random_order(rng, n)); break;
    default: A = random_full(rng, n); break;
  }
  const int flips = uniform_int(rng, 0, 2);
  for (int i = 0; i < flips && !A.cells().empty(); ++i) {
    const auto r = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(A.cells().size()) - 1));
    A.set_rank(r, reversed(A.at_rank(r)));
  }
  punch_holes(rng, A, holes);
  return A;
}

inline ConstraintSet random_constraint_set(Rng& rng) {
  // Weighted toward the H4-free class.
  if (uniform_int(rng, 0, 1) == 0) return ConstraintSet::h4_free();
  return ConstraintSet::from_mask(static_cast<std::uint8_t>(uniform_int(rng, 1, 7)));
}

}  // namespace htour
