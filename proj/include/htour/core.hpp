#pragma once

// Data model for holey 3-hypertournaments.
//
// A 3-hypertournament picks one of the two cyclic orientations on every
// 3-set of vertices. We store one Orientation per sorted triple {a<b<c}:
// Plus means (a,b,c) and its rotations are in R, Minus means (a,c,b) and its
// rotations are in R, Hole means no tuple on the triple is in R. Vertices are
// numbered 1..n.

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace htour {

using Vertex = int;

// Malformed or out-of-contract input (CLI exit code 2).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ContradictoryTriple : public InputError {
 public:
  using InputError::InputError;
};

class HoleyInput : public InputError {
 public:
  using InputError::InputError;
};

// A size guard refused to run an exhaustive procedure (CLI exit code 3).
class GuardRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Orientation : std::uint8_t { Hole = 0, Plus = 1, Minus = 2 };

// Membership of an ordered tuple (x,y,z) in R.
enum class TupleOrientation : std::uint8_t { InR, Reversed, Hole };

constexpr Orientation reversed(Orientation o) noexcept {
  switch (o) {
    case Orientation::Plus: return Orientation::Minus;
    case Orientation::Minus: return Orientation::Plus;
    default: return Orientation::Hole;
  }
}

constexpr char orientation_sign(Orientation o) noexcept {
  return o == Orientation::Plus ? '+' : o == Orientation::Minus ? '-' : '.';
}

constexpr std::int64_t binom(std::int64_t n, std::int64_t k) noexcept {
  if (k < 0 || n < k) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// A 3-set of vertices, members stored in increasing order.
struct Triple {
  Vertex a = 0, b = 0, c = 0;

  // Sorts the three members; throws if two coincide.
  static Triple of(Vertex x, Vertex y, Vertex z) {
    std::array<Vertex, 3> v{x, y, z};
    std::sort(v.begin(), v.end());
    if (v[0] == v[1] || v[1] == v[2]) {
      throw InputError("triple has repeated vertex " + std::to_string(v[1]));
    }
    return {v[0], v[1], v[2]};
  }

  auto operator<=>(const Triple&) const = default;
};

inline std::size_t triple_count(int n) {
  return static_cast<std::size_t>(binom(n, 3));
}

// Lexicographic rank of {a<b<c} among all triples over 1..n.
inline std::size_t triple_rank(int n, const Triple& t) noexcept {
  const std::int64_t a = t.a - 1, b = t.b - 1, c = t.c - 1;
  return static_cast<std::size_t>(binom(n, 3) - binom(n - a, 3) +
                                  binom(n - a - 1, 2) - binom(n - b, 2) +
                                  (c - b - 1));
}

// All triples over 1..n in rank order.
inline std::vector<Triple> all_triples(int n) {
  std::vector<Triple> out;
  out.reserve(triple_count(n));
  for (Vertex a = 1; a <= n; ++a)
    for (Vertex b = a + 1; b <= n; ++b)
      for (Vertex c = b + 1; c <= n; ++c) out.push_back({a, b, c});
  return out;
}

class HoleyHT {
 public:
  HoleyHT() = default;
  explicit HoleyHT(int n) : n_(n) {
    if (n < 0) throw InputError("negative vertex count");
    cells_.assign(triple_count(n), Orientation::Hole);
  }

  int size() const noexcept { return n_; }

  Orientation at(const Triple& t) const { return cells_[rank_checked(t)]; }
  void set(const Triple& t, Orientation o) { cells_[rank_checked(t)] = o; }

  Orientation at_rank(std::size_t r) const { return cells_.at(r); }
  void set_rank(std::size_t r, Orientation o) { cells_.at(r) = o; }

  std::span<const Orientation> cells() const noexcept { return cells_; }

  std::size_t hole_count() const noexcept {
    return static_cast<std::size_t>(
        std::count(cells_.begin(), cells_.end(), Orientation::Hole));
  }
  bool is_full() const noexcept { return hole_count() == 0; }

  bool contains(Vertex v) const noexcept { return v >= 1 && v <= n_; }

  void require_vertex(Vertex v) const {
    if (!contains(v)) {
      throw InputError("vertex " + std::to_string(v) + " out of range 1.." +
                       std::to_string(n_));
    }
  }

  bool operator==(const HoleyHT&) const = default;

 private:
  std::size_t rank_checked(const Triple& t) const {
    require_vertex(t.a);
    require_vertex(t.c);
    if (!(t.a < t.b && t.b < t.c)) throw InputError("triple not sorted");
    return triple_rank(n_, t);
  }

  int n_ = 0;
  std::vector<Orientation> cells_;
};

// A linear order on 1..n, listed from least to greatest.
class LinearOrder {
 public:
  LinearOrder() = default;
  explicit LinearOrder(std::vector<Vertex> perm) : perm_(std::move(perm)) {
    const int n = static_cast<int>(perm_.size());
    pos_.assign(n + 1, -1);
    for (int i = 0; i < n; ++i) {
      const Vertex v = perm_[i];
      if (v < 1 || v > n || pos_[v] != -1) {
        throw InputError("order is not a permutation of 1.." +
                         std::to_string(n));
      }
      pos_[v] = i;
    }
  }

  static LinearOrder natural(int n) {
    std::vector<Vertex> p(n);
    for (int i = 0; i < n; ++i) p[i] = i + 1;
    return LinearOrder(std::move(p));
  }

  int size() const noexcept { return static_cast<int>(perm_.size()); }
  const std::vector<Vertex>& perm() const noexcept { return perm_; }
  int position(Vertex v) const { return pos_.at(v); }
  bool less(Vertex x, Vertex y) const { return position(x) < position(y); }

  // Sorts three vertices ascending in this order.
  std::array<Vertex, 3> sort3(Vertex x, Vertex y, Vertex z) const {
    std::array<Vertex, 3> v{x, y, z};
    std::sort(v.begin(), v.end(),
              [this](Vertex p, Vertex q) { return less(p, q); });
    return v;
  }

  bool operator==(const LinearOrder& o) const { return perm_ == o.perm_; }

 private:
  std::vector<Vertex> perm_;
  std::vector<int> pos_;
};

struct Hypergraph3 {
  int n = 0;
  std::vector<Triple> hyperedges;  // sorted, unique

  bool operator==(const Hypergraph3&) const = default;
};

// Simple undirected graph on 1..n.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n) : n_(n), adj_(static_cast<std::size_t>(n) * n, 0) {}

  int size() const noexcept { return n_; }

  void add_edge(Vertex u, Vertex v) {
    check(u, v);
    adj_[idx(u, v)] = adj_[idx(v, u)] = 1;
  }
  bool has_edge(Vertex u, Vertex v) const {
    if (u == v) return false;
    return adj_[idx(u, v)] != 0;
  }
  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 1; u <= n_; ++u)
      for (Vertex v = u + 1; v <= n_; ++v)
        if (has_edge(u, v)) out.emplace_back(u, v);
    return out;
  }

  bool operator==(const SimpleGraph&) const = default;

 private:
  void check(Vertex u, Vertex v) const {
    if (u < 1 || v < 1 || u > n_ || v > n_ || u == v) {
      throw InputError("bad graph edge " + std::to_string(u) + " " +
                       std::to_string(v));
    }
  }
  std::size_t idx(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u - 1) * n_ + (v - 1);
  }

  int n_ = 0;
  std::vector<std::uint8_t> adj_;
};

// Whether (x,y,z) is a rotation of its sorted form (even permutation).
inline bool is_even_arrangement(Vertex x, Vertex y, Vertex z) noexcept {
  const int inversions = (x > y) + (x > z) + (y > z);
  return inversions % 2 == 0;
}

// The Orientation of {x,y,z} that places (x,y,z) in R.
inline Orientation orientation_placing(Vertex x, Vertex y, Vertex z) noexcept {
  return is_even_arrangement(x, y, z) ? Orientation::Plus : Orientation::Minus;
}

// Orientation of {x,y,z} after carrying a sorted triple {p<q<r} with value
// `o` along p->x, q->y, r->z.
inline Orientation transport(Orientation o, Vertex x, Vertex y, Vertex z) noexcept {
  if (o == Orientation::Hole) return o;
  return o == Orientation::Plus ? orientation_placing(x, y, z) : orientation_placing(x, z, y);
}

inline TupleOrientation orientation_of(const HoleyHT& A, Vertex x, Vertex y,
                                       Vertex z) {
  A.require_vertex(x);
  A.require_vertex(y);
  A.require_vertex(z);
  const Orientation o = A.at(Triple::of(x, y, z));
  if (o == Orientation::Hole) return TupleOrientation::Hole;
  return o == orientation_placing(x, y, z) ? TupleOrientation::InR
                                           : TupleOrientation::Reversed;
}

// Builds the structure whose R is the cyclic closure of `tuples`.
inline HoleyHT from_tuples(int n, std::span<const std::array<Vertex, 3>> tuples) {
  HoleyHT A(n);
  for (const auto& [x, y, z] : tuples) {
    A.require_vertex(x);
    A.require_vertex(y);
    A.require_vertex(z);
    const Triple t = Triple::of(x, y, z);
    const Orientation want = orientation_placing(x, y, z);
    const Orientation have = A.at(t);
    if (have != Orientation::Hole && have != want) {
      throw ContradictoryTriple("both orientations asserted on {" +
                                std::to_string(t.a) + "," + std::to_string(t.b) +
                                "," + std::to_string(t.c) + "}");
    }
    A.set(t, want);
  }
  return A;
}

inline HoleyHT from_tuples(int n, std::initializer_list<std::array<Vertex, 3>> tuples) {
  return from_tuples(n, std::span<const std::array<Vertex, 3>>(tuples.begin(), tuples.size()));
}

struct Restriction {
  HoleyHT structure;
  std::vector<Vertex> original;  // original[i] is the label of new vertex i+1
};

// Substructure on `subset`, relabeled 1..|subset| preserving relative order.
inline Restriction restrict_to(const HoleyHT& A, std::vector<Vertex> subset) {
  if (subset.empty()) throw InputError("empty vertex subset");
  std::sort(subset.begin(), subset.end());
  if (std::adjacent_find(subset.begin(), subset.end()) != subset.end()) {
    throw InputError("vertex subset has duplicates");
  }
  for (Vertex v : subset) A.require_vertex(v);
  const int m = static_cast<int>(subset.size());
  Restriction r{HoleyHT(m), subset};
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = j + 1; k < m; ++k)
        r.structure.set({i + 1, j + 1, k + 1},
                        A.at({subset[i], subset[j], subset[k]}));
  return r;
}

inline HoleyHT induced(const HoleyHT& A, std::vector<Vertex> subset) {
  return restrict_to(A, std::move(subset)).structure;
}

inline std::vector<Vertex> all_vertices_except(int n, Vertex skip) {
  std::vector<Vertex> out;
  for (Vertex v = 1; v <= n; ++v)
    if (v != skip) out.push_back(v);
  return out;
}

// Reverses every assigned orientation; holes stay holes.
inline HoleyHT complement(const HoleyHT& A) {
  HoleyHT out(A.size());
  for (std::size_t r = 0; r < A.cells().size(); ++r)
    out.set_rank(r, reversed(A.at_rank(r)));
  return out;
}

struct Gluing {
  HoleyHT structure;
  std::vector<Vertex> second_labels;  // second_labels[i] is the new id of vertex i+1 of the second factor
};

// Free amalgam of A1 and A2 identifying base1[i] with base2[i]. A1 keeps its
// labels; the remaining vertices of A2 follow as |A1|+1.. in increasing
// order. Triples meeting both sides outside the base are holes.
inline Gluing glue(const HoleyHT& A1, const HoleyHT& A2,
                   std::span<const Vertex> base1, std::span<const Vertex> base2) {
  if (base1.size() != base2.size()) throw InputError("base sizes differ");
  const int n1 = A1.size(), n2 = A2.size();
  std::vector<Vertex> label(n2 + 1, 0);
  std::vector<bool> used1(n1 + 1, false);
  for (std::size_t i = 0; i < base1.size(); ++i) {
    A1.require_vertex(base1[i]);
    A2.require_vertex(base2[i]);
    if (used1[base1[i]] || label[base2[i]] != 0) throw InputError("repeated base vertex");
    used1[base1[i]] = true;
    label[base2[i]] = base1[i];
  }
  int next = n1;
  for (Vertex v = 1; v <= n2; ++v)
    if (label[v] == 0) label[v] = ++next;

  Gluing g{HoleyHT(next), std::vector<Vertex>(label.begin() + 1, label.end())};
  for (const Triple& t : all_triples(n1)) g.structure.set(t, A1.at(t));
  for (const Triple& t : all_triples(n2)) {
    const Orientation o = A2.at(t);
    const Vertex x = label[t.a], y = label[t.b], z = label[t.c];
    const Triple image = Triple::of(x, y, z);
    const Orientation mapped = transport(o, x, y, z);
    const bool in_base = x <= n1 && y <= n1 && z <= n1;
    if (in_base && g.structure.at(image) != mapped) {
      throw InputError("factors disagree on base triple {" + std::to_string(image.a) +
                       "," + std::to_string(image.b) + "," + std::to_string(image.c) + "}");
    }
    g.structure.set(image, mapped);
  }
  return g;
}

// Image of A under the bijection image[i-1] = new label of vertex i.
inline HoleyHT relabel(const HoleyHT& A, std::span<const Vertex> image) {
  const int n = A.size();
  if (static_cast<int>(image.size()) != n) throw InputError("relabeling size mismatch");
  LinearOrder{std::vector<Vertex>(image.begin(), image.end())};  // validates the bijection
  HoleyHT B(n);
  for (const Triple& t : all_triples(n)) {
    const Vertex x = image[t.a - 1], y = image[t.b - 1], z = image[t.c - 1];
    B.set(Triple::of(x, y, z), transport(A.at(t), x, y, z));
  }
  return B;
}

inline constexpr int kIsomorphismGuard = 10;

// Vertex bijection f (f[i-1] is the image of i) preserving orientation_of on
// every ordered triple, or nullopt.
inline std::optional<std::vector<Vertex>> is_isomorphic(const HoleyHT& A,
                                                        const HoleyHT& B) {
  const int n = A.size();
  if (n > kIsomorphismGuard || B.size() > kIsomorphismGuard) {
    throw GuardRefusal("isomorphism search limited to " +
                       std::to_string(kIsomorphismGuard) + " vertices");
  }
  if (n != B.size() || A.hole_count() != B.hole_count()) return std::nullopt;

  std::vector<Vertex> image(n + 1, 0);
  std::vector<bool> used(n + 1, false);

  // Assigns vertices 1..n in turn; every triple closed by vertex k is checked.
  auto consistent = [&](Vertex k) {
    for (Vertex i = 1; i < k; ++i)
      for (Vertex j = i + 1; j < k; ++j) {
        const Orientation oa = A.at({i, j, k});
        const Vertex x = image[i], y = image[j], z = image[k];
        const Orientation ob = B.at(Triple::of(x, y, z));
        if (oa == Orientation::Hole || ob == Orientation::Hole) {
          if (oa != ob) return false;
          continue;
        }
        // (i,j,k) in R_A must map to (x,y,z) in R_B.
        const bool in_a = oa == Orientation::Plus;
        const bool in_b = ob == orientation_placing(x, y, z);
        if (in_a != in_b) return false;
      }
    return true;
  };

  auto search = [&](auto&& self, Vertex k) -> bool {
    if (k > n) return true;
    for (Vertex t = 1; t <= n; ++t) {
      if (used[t]) continue;
      image[k] = t;
      used[t] = true;
      if (consistent(k) && self(self, k + 1)) return true;
      used[t] = false;
    }
    return false;
  };

  if (!search(search, 1)) return std::nullopt;
  return std::vector<Vertex>(image.begin() + 1, image.end());
}

inline Hypergraph3 hat(const HoleyHT& A, const LinearOrder& ord) {
  if (ord.size() != A.size()) throw InputError("order size mismatch");
  if (!A.is_full()) throw HoleyInput("hat requires a structure without holes");
  Hypergraph3 H{A.size(), {}};
  for (const Triple& t : all_triples(A.size())) {
    const auto [x, y, z] = ord.sort3(t.a, t.b, t.c);
    if (orientation_of(A, x, y, z) == TupleOrientation::InR) H.hyperedges.push_back(t);
  }
  return H;
}

inline HoleyHT unhat(const Hypergraph3& H, const LinearOrder& ord) {
  if (ord.size() != H.n) throw InputError("order size mismatch");
  std::vector<Triple> edges = H.hyperedges;
  std::sort(edges.begin(), edges.end());
  HoleyHT A(H.n);
  for (const Triple& t : all_triples(H.n)) {
    const auto [x, y, z] = ord.sort3(t.a, t.b, t.c);
    const bool edge = std::binary_search(edges.begin(), edges.end(), t);
    A.set(t, edge ? orientation_placing(x, y, z) : orientation_placing(x, z, y));
  }
  return A;
}

}  // namespace htour
