#pragma once

// Generators for the named structures: the 4-vertex types, the forcing
// gadgets and their chains O_n / O_n¬, the glued obstruction B_n, cyclic
// structures and even structures from a graph.

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "htour/classify.hpp"
#include "htour/core.hpp"

namespace htour {

class ChainInconsistent : public InputError {
 public:
  using InputError::InputError;
};

// One forcing link. With (x,y,z,w) the image of (1,2,3,4):
//   Fwd       xyz => yzw      (gadget G)
//   FwdNeg    xyz => ¬xzw     (gadget G¬)
//   CoFwd     ¬xyz => ¬yzw    (complement of G)
//   CoFwdNeg  ¬xyz => xzw     (complement of G¬)
enum class LinkKind : std::uint8_t { Fwd, FwdNeg, CoFwd, CoFwdNeg };

constexpr std::string_view to_string(LinkKind k) noexcept {
  switch (k) {
    case LinkKind::Fwd: return "Fwd";
    case LinkKind::FwdNeg: return "FwdNeg";
    case LinkKind::CoFwd: return "CoFwd";
    default: return "CoFwdNeg";
  }
}

inline HoleyHT gadget(LinkKind kind) {
  switch (kind) {
    case LinkKind::Fwd: return from_tuples(4, {{1, 3, 4}, {1, 4, 2}});
    case LinkKind::FwdNeg: return from_tuples(4, {{2, 4, 3}, {1, 4, 2}});
    case LinkKind::CoFwd: return complement(gadget(LinkKind::Fwd));
    default: return complement(gadget(LinkKind::FwdNeg));
  }
}

struct Link {
  LinkKind kind;
  std::array<Vertex, 4> at;
};

struct ChainSpec {
  int n = 0;
  std::vector<Link> links;
};

// Accumulates gadget embeddings. Gadget holes are remembered as triples that
// must stay holes; the emitted structure just has plain holes there.
class ChainBuilder {
 public:
  explicit ChainBuilder(int n) : ht_(n), must_hole_(triple_count(n), false) {}

  ChainBuilder& apply_link(LinkKind kind, const std::array<Vertex, 4>& at) {
    for (Vertex v : at) ht_.require_vertex(v);
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (at[i] == at[j]) throw InputError("link vertices must be distinct");

    const HoleyHT g = gadget(kind);
    for (const Triple& t : all_triples(4)) {
      const Vertex x = at[t.a - 1], y = at[t.b - 1], z = at[t.c - 1];
      const Triple image = Triple::of(x, y, z);
      const std::size_t r = triple_rank(ht_.size(), image);
      const Orientation want = transport(g.at(t), x, y, z);
      const Orientation have = ht_.at_rank(r);
      if (want == Orientation::Hole) {
        if (have != Orientation::Hole) throw inconsistent(kind, at, image, "must stay a hole");
        must_hole_[r] = true;
      } else {
        if (must_hole_[r]) throw inconsistent(kind, at, image, "is a required hole");
        if (have != Orientation::Hole && have != want) {
          throw inconsistent(kind, at, image, "gets both orientations");
        }
        ht_.set_rank(r, want);
      }
    }
    return *this;
  }

  const HoleyHT& structure() const noexcept { return ht_; }
  bool must_stay_hole(const Triple& t) const { return must_hole_[triple_rank(ht_.size(), t)]; }

 private:
  static ChainInconsistent inconsistent(LinkKind kind, const std::array<Vertex, 4>& at,
                                        const Triple& t, std::string_view what) {
    return ChainInconsistent(std::string(to_string(kind)) + " link at (" + std::to_string(at[0]) +
                             "," + std::to_string(at[1]) + "," + std::to_string(at[2]) + "," +
                             std::to_string(at[3]) + "): triple {" + std::to_string(t.a) + "," +
                             std::to_string(t.b) + "," + std::to_string(t.c) + "} " +
                             std::string(what));
  }

  HoleyHT ht_;
  std::vector<bool> must_hole_;
};

inline HoleyHT build_chain(const ChainSpec& spec) {
  ChainBuilder b(spec.n);
  for (const Link& l : spec.links) b.apply_link(l.kind, l.at);
  return b.structure();
}

inline void require_chain_size(int n) {
  if (n < 6) throw InputError("chain families need n >= 6, got " + std::to_string(n));
}

// 123 => 234 => ... => (n-2)(n-1)n => ¬(n-2)n1 => ¬n12 => ¬123
inline ChainSpec on_chain(int n) {
  require_chain_size(n);
  ChainSpec s{n, {}};
  for (Vertex i = 1; i <= n - 3; ++i) s.links.push_back({LinkKind::Fwd, {i, i + 1, i + 2, i + 3}});
  s.links.push_back({LinkKind::FwdNeg, {n - 2, n - 1, n, 1}});
  s.links.push_back({LinkKind::CoFwd, {n - 2, n, 1, 2}});
  s.links.push_back({LinkKind::CoFwd, {n, 1, 2, 3}});
  return s;
}

// ¬123 => ¬234 => ... => ¬(n-2)(n-1)n => (n-2)n1 => n12 => 123
inline ChainSpec onneg_chain(int n) {
  require_chain_size(n);
  ChainSpec s{n, {}};
  for (Vertex i = 1; i <= n - 3; ++i) s.links.push_back({LinkKind::CoFwd, {i, i + 1, i + 2, i + 3}});
  s.links.push_back({LinkKind::CoFwdNeg, {n - 2, n - 1, n, 1}});
  s.links.push_back({LinkKind::Fwd, {n - 2, n, 1, 2}});
  s.links.push_back({LinkKind::Fwd, {n, 1, 2, 3}});
  return s;
}

inline HoleyHT gen_on(int n) { return build_chain(on_chain(n)); }
inline HoleyHT gen_onneg(int n) { return build_chain(onneg_chain(n)); }

// O_n and O_n¬ glued along 1,2,3; the second factor's 4..n become n+1..2n-3.
inline HoleyHT gen_bn(int n) {
  const std::array<Vertex, 3> base{1, 2, 3};
  return glue(gen_on(n), gen_onneg(n), base, base).structure;
}

// Triples to add to O_n minus vertex v so that {1,2,3} can be positive:
// (1,2,3)..(v-3,v-2,v-1) in R, (v+1,v+3,v+2)..(n-2,n,n-1) in R, and
// (n-2,n,1), (n,1,2) in R, skipping anything that contains v. Labels are
// those of O_n. For the dual chain every value is reversed.
inline std::vector<std::pair<Triple, Orientation>> deletion_seed(int n, Vertex v, bool dual) {
  require_chain_size(n);
  if (v < 4 || v > n) throw InputError("deleted vertex must be in 4..n");
  std::vector<std::array<Vertex, 3>> tuples;
  for (Vertex i = 1; i <= v - 3; ++i) tuples.push_back({i, i + 1, i + 2});
  for (Vertex i = v + 1; i <= n - 2; ++i) tuples.push_back({i, i + 2, i + 1});
  tuples.push_back({n - 2, n, 1});
  tuples.push_back({n, 1, 2});

  std::vector<std::pair<Triple, Orientation>> out;
  for (const auto& [x, y, z] : tuples) {
    if (x == v || y == v || z == v) continue;
    const Orientation o = orientation_placing(x, y, z);
    out.emplace_back(Triple::of(x, y, z), dual ? reversed(o) : o);
  }
  return out;
}

// The chain structure (O_n, or O_n¬ when dual) without vertex v, with the
// deletion seed merged in. Throws ChainInconsistent if the seed overwrites
// an assigned triple with the other orientation.
inline HoleyHT seeded_deletion(int n, Vertex v, bool dual) {
  const HoleyHT full = dual ? gen_onneg(n) : gen_on(n);
  Restriction r = restrict_to(full, all_vertices_except(n, v));
  std::vector<Vertex> relabel(n + 1, 0);
  for (std::size_t i = 0; i < r.original.size(); ++i) relabel[r.original[i]] = static_cast<Vertex>(i + 1);
  for (const auto& [t, o] : deletion_seed(n, v, dual)) {
    const Triple local{relabel[t.a], relabel[t.b], relabel[t.c]};
    const Orientation have = r.structure.at(local);
    if (have != Orientation::Hole && have != o) {
      throw ChainInconsistent("deletion seed contradicts triple {" + std::to_string(t.a) + "," +
                              std::to_string(t.b) + "," + std::to_string(t.c) + "}");
    }
    r.structure.set(local, o);
  }
  return r.structure;
}

inline HoleyHT complete_hypergraph_unhat(const LinearOrder& ord) {
  Hypergraph3 H{ord.size(), all_triples(ord.size())};
  return unhat(H, ord);
}

// Orients every triple along the cyclic order `ord`.
inline HoleyHT gen_cyclic(const LinearOrder& ord) { return complete_hypergraph_unhat(ord); }

// (a,b,c) in R for a<b<c in `ord` iff {a,b,c} spans an even number of edges.
inline HoleyHT gen_even(const SimpleGraph& graph, const LinearOrder& ord) {
  if (graph.size() != ord.size()) throw InputError("graph and order sizes differ");
  HoleyHT A(ord.size());
  for (const Triple& t : all_triples(ord.size())) {
    const auto [a, b, c] = ord.sort3(t.a, t.b, t.c);
    const int edges = graph.has_edge(a, b) + graph.has_edge(a, c) + graph.has_edge(b, c);
    A.set(t, edges % 2 == 0 ? orientation_placing(a, b, c) : orientation_placing(a, c, b));
  }
  return A;
}

// Representatives of the three 4-vertex types, by their natural-order hat.
inline HoleyHT h4_instance() {
  return unhat({4, {{1, 2, 3}, {1, 3, 4}}}, LinearOrder::natural(4));
}
inline HoleyHT o4_instance() { return unhat({4, {{1, 2, 3}}}, LinearOrder::natural(4)); }
inline HoleyHT c4_instance() { return gen_cyclic(LinearOrder::natural(4)); }

}  // namespace htour
