#pragma once

// Ordered expansions and exhaustive arrow checks C -> (B)^A_2.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "htour/classify.hpp"
#include "htour/core.hpp"
#include "htour/families.hpp"
#include "htour/parallel.hpp"

namespace htour {

class ExpansionMismatch : public InputError {
 public:
  using InputError::InputError;
};

enum class ExpansionKind : std::uint8_t { Cyclic, Even, All };

constexpr std::string_view to_string(ExpansionKind k) noexcept {
  switch (k) {
    case ExpansionKind::Cyclic: return "cyclic";
    case ExpansionKind::Even: return "even";
    default: return "all";
  }
}

inline ExpansionKind parse_expansion_kind(std::string_view s) {
  if (s == "cyclic") return ExpansionKind::Cyclic;
  if (s == "even") return ExpansionKind::Even;
  if (s == "all") return ExpansionKind::All;
  throw InputError("unknown expansion kind '" + std::string(s) + "'");
}

struct OrderedHT {
  HoleyHT ht;
  LinearOrder ord;
  std::optional<SimpleGraph> graph;  // Even only
  ExpansionKind kind = ExpansionKind::All;

  int size() const noexcept { return ht.size(); }
};

// Every x<y<z in `ord` has (x,y,z) in R.
inline bool is_cyclic_under(const HoleyHT& A, const LinearOrder& ord) {
  return A.is_full() && A == gen_cyclic(ord);
}

inline OrderedHT expand(HoleyHT A, ExpansionKind kind, LinearOrder ord,
                        std::optional<SimpleGraph> graph = std::nullopt) {
  if (ord.size() != A.size()) throw ExpansionMismatch("order size differs from structure");
  switch (kind) {
    case ExpansionKind::Cyclic:
      if (graph) throw ExpansionMismatch("cyclic expansion takes no graph");
      if (!is_cyclic_under(A, ord)) {
        throw ExpansionMismatch("some x<y<z in the order has (x,y,z) outside R");
      }
      break;
    case ExpansionKind::Even:
      if (!graph) throw ExpansionMismatch("even expansion needs a graph");
      if (graph->size() != A.size()) throw ExpansionMismatch("graph size differs");
      if (!A.is_full() || A != gen_even(*graph, ord)) {
        throw ExpansionMismatch("R is not the edge-parity orientation of the graph");
      }
      break;
    case ExpansionKind::All:
      if (graph) throw ExpansionMismatch("'all' expansion takes no graph");
      break;
  }
  return {std::move(A), std::move(ord), std::move(graph), kind};
}

// Holes become Plus; embeddings of full structures survive the filling.
inline OrderedHT fill_holes_ordered(const OrderedHT& C) {
  if (C.kind != ExpansionKind::All) throw InputError("hole filling applies to kind 'all'");
  OrderedHT out = C;
  for (std::size_t r = 0; r < out.ht.cells().size(); ++r)
    if (out.ht.at_rank(r) == Orientation::Hole) out.ht.set_rank(r, Orientation::Plus);
  return out;
}

// emb[i-1] is the image of vertex i.
using Embedding = std::vector<Vertex>;

// Order-preserving injections A -> C that preserve every triple (holes
// included) and, for Even, the graph. Listed lexicographically by the
// C-positions of A's vertices taken in A's order.
inline std::vector<Embedding> embeddings(const OrderedHT& A, const OrderedHT& C) {
  if (A.kind != C.kind) throw InputError("embedding between different expansion kinds");
  const int k = A.size(), n = C.size();
  std::vector<Embedding> out;
  if (k > n) return out;

  const auto triples = all_triples(k);
  std::vector<int> pos(k);
  for (int i = 0; i < k; ++i) pos[i] = i;
  Embedding f(k);

  while (true) {
    for (int i = 0; i < k; ++i) f[A.ord.perm()[i] - 1] = C.ord.perm()[pos[i]];
    bool ok = true;
    for (const Triple& t : triples) {
      const Vertex x = f[t.a - 1], y = f[t.b - 1], z = f[t.c - 1];
      if (C.ht.at(Triple::of(x, y, z)) != transport(A.ht.at(t), x, y, z)) {
        ok = false;
        break;
      }
    }
    if (ok && A.graph) {
      for (Vertex u = 1; ok && u <= k; ++u)
        for (Vertex v = u + 1; v <= k; ++v)
          if (A.graph->has_edge(u, v) != C.graph->has_edge(f[u - 1], f[v - 1])) {
            ok = false;
            break;
          }
    }
    if (ok) out.push_back(f);

    int i = k - 1;
    while (i >= 0 && pos[i] == n - k + i) --i;
    if (i < 0) break;
    ++pos[i];
    for (int j = i + 1; j < k; ++j) pos[j] = pos[j - 1] + 1;
  }
  return out;
}

inline constexpr std::size_t kArrowGuard = 25;

struct ArrowOptions {
  bool prune = false;           // depth-first search with early monochromatic-copy cuts
  bool override_guard = false;  // only honored together with prune
  int jobs = 1;                 // exhaustive mode splits the counter range
};

struct ArrowVerdict {
  bool holds = false;
  // Colour of each A-embedding (index into a_embeddings), when !holds. The
  // least counterexample read as a binary counter with embedding i as bit i.
  std::optional<std::vector<std::uint8_t>> counterexample;
  std::vector<Embedding> a_embeddings;
  std::size_t b_copies = 0;
};

namespace detail {

// For each embedding of B into C, the indices of the A-embeddings inside it.
inline std::vector<std::vector<std::uint32_t>> copies_of_b(const OrderedHT& C, const OrderedHT& B,
                                                           const OrderedHT& A,
                                                           const std::vector<Embedding>& in_c) {
  std::map<Embedding, std::uint32_t> index;
  for (std::uint32_t i = 0; i < in_c.size(); ++i) index.emplace(in_c[i], i);
  const auto a_in_b = embeddings(A, B);
  std::vector<std::vector<std::uint32_t>> copies;
  for (const Embedding& g : embeddings(B, C)) {
    std::vector<std::uint32_t> members;
    for (const Embedding& h : a_in_b) {
      Embedding composed(h.size());
      for (std::size_t i = 0; i < h.size(); ++i) composed[i] = g[h[i] - 1];
      members.push_back(index.at(composed));
    }
    std::sort(members.begin(), members.end());
    copies.push_back(std::move(members));
  }
  return copies;
}

}  // namespace detail

inline ArrowVerdict arrow_check(const OrderedHT& C, const OrderedHT& B, const OrderedHT& A,
                                const ArrowOptions& opt = {}) {
  if (A.kind != B.kind || B.kind != C.kind) throw InputError("arrow check across expansion kinds");
  ArrowVerdict v;
  v.a_embeddings = embeddings(A, C);
  const std::size_t k = v.a_embeddings.size();
  if (k > kArrowGuard && !(opt.override_guard && opt.prune)) {
    throw GuardRefusal(std::to_string(k) + " embeddings of A exceed the guard of " +
                       std::to_string(kArrowGuard) + " (2^" + std::to_string(k) + " colourings)");
  }
  const auto copies = detail::copies_of_b(C, B, A, v.a_embeddings);
  v.b_copies = copies.size();

  if (!opt.prune) {
    std::vector<std::uint64_t> masks;
    for (const auto& c : copies) {
      std::uint64_t m = 0;
      for (auto i : c) m |= std::uint64_t{1} << i;
      masks.push_back(m);
    }
    auto monochromatic = [&](std::uint64_t colouring) {
      for (auto m : masks)
        if ((colouring & m) == 0 || (colouring & m) == m) return true;
      return false;
    };
    const std::uint64_t total = std::uint64_t{1} << k;
    const std::size_t chunks = static_cast<std::size_t>(std::max(opt.jobs, 1));
    const auto found = parallel_map(chunks, opt.jobs, [&](std::size_t ci) {
      const std::uint64_t lo = total * ci / chunks, hi = total * (ci + 1) / chunks;
      for (std::uint64_t c = lo; c < hi; ++c)
        if (!monochromatic(c)) return std::optional<std::uint64_t>(c);
      return std::optional<std::uint64_t>();
    });
    for (const auto& f : found) {
      if (!f) continue;
      std::vector<std::uint8_t> colours(k);
      for (std::size_t i = 0; i < k; ++i) colours[i] = static_cast<std::uint8_t>((*f >> i) & 1u);
      v.counterexample = std::move(colours);
      return v;
    }
    v.holds = true;
    return v;
  }

  // Decide the most significant embedding first, colour 0 first, so the
  // first complete assignment found is the least counter value.
  std::vector<std::vector<std::uint32_t>> closing(k);
  bool empty_copy = false;
  for (std::uint32_t c = 0; c < copies.size(); ++c) {
    if (copies[c].empty()) empty_copy = true;
    else closing[copies[c].front()].push_back(c);
  }
  if (empty_copy) {
    v.holds = true;
    return v;
  }
  std::vector<std::uint8_t> colours(k, 0);
  auto walk = [&](auto&& self, std::int64_t i) -> bool {
    if (i < 0) return true;
    for (std::uint8_t col : {std::uint8_t{0}, std::uint8_t{1}}) {
      colours[i] = col;
      bool mono = false;
      for (auto c : closing[i]) {
        const auto& members = copies[c];
        mono = std::all_of(members.begin(), members.end(),
                           [&](std::uint32_t m) { return colours[m] == col; });
        if (mono) break;
      }
      if (!mono && self(self, i - 1)) return true;
    }
    return false;
  };
  if (walk(walk, static_cast<std::int64_t>(k) - 1)) {
    v.counterexample = colours;
  } else {
    v.holds = true;
  }
  return v;
}

// All orders making A a cyclic ordered structure, by least element.
inline std::vector<LinearOrder> compatible_orders_cyclic(const HoleyHT& A) {
  if (!A.is_full() || !class_member(A, ConstraintSet::cyclic()).member) {
    throw InputError("structure is not in the cyclic class");
  }
  const int n = A.size();
  std::vector<LinearOrder> out;
  for (Vertex s = 1; s <= n; ++s) {
    std::vector<Vertex> rest = all_vertices_except(n, s);
    std::sort(rest.begin(), rest.end(), [&](Vertex x, Vertex y) {
      return orientation_of(A, s, x, y) == TupleOrientation::InR;
    });
    rest.insert(rest.begin(), s);
    LinearOrder ord(std::move(rest));
    if (!is_cyclic_under(A, ord)) {
      throw std::logic_error("cyclic member without an order starting at " + std::to_string(s));
    }
    out.push_back(std::move(ord));
  }
  return out;
}

}  // namespace htour
