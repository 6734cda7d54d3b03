#pragma once

// Completion of holey 3-hypertournaments into a 4-constrained class.
//
// Constraints live on 4-subsets. propagate() is unit propagation: a 4-subset
// with exactly one hole whose other orientation would yield a forbidden type
// forces the hole. complete() is a deterministic backtracking search over
// holes with propagation after every decision.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "htour/classify.hpp"
#include "htour/core.hpp"
#include "htour/parallel.hpp"

namespace htour {

struct CompletionProblem {
  HoleyHT structure;
  ConstraintSet allowed = ConstraintSet::h4_free();
};

enum class Verdict : std::uint8_t { Sat, Unsat };

struct SolveStats {
  std::uint64_t decisions = 0;
  std::uint64_t conflicts = 0;
  std::uint64_t forced = 0;
};

struct SolveResult {
  Verdict verdict = Verdict::Unsat;
  std::optional<HoleyHT> completion;    // present iff Sat
  std::vector<Quadruple> certificate;   // conflict 4-subsets, sorted, unique; Unsat only
  SolveStats stats;

  bool sat() const noexcept { return verdict == Verdict::Sat; }
};

struct ForcedValue {
  Triple triple;
  Orientation value;
  Quadruple reason;

  bool operator==(const ForcedValue&) const = default;
};

struct PropagateResult {
  HoleyHT structure;  // the fixpoint (partial if a conflict was hit)
  std::optional<Quadruple> conflict;
  std::vector<ForcedValue> forced;  // in forcing order

  bool ok() const noexcept { return !conflict.has_value(); }
};

namespace detail {

// Precomputed incidence between triples and 4-subsets over 1..n.
struct QuadIndex {
  int n = 0;
  std::vector<Quadruple> quads;                          // lexicographic
  std::vector<std::array<std::uint32_t, 4>> quad_cells;  // (abc, abd, acd, bcd) ranks
  std::vector<std::vector<std::uint32_t>> cell_quads;    // per triple rank, ascending
  std::vector<Triple> triples;                           // by rank

  explicit QuadIndex(int n_) : n(n_), cell_quads(triple_count(n_)), triples(all_triples(n_)) {
    for (Vertex a = 1; a <= n; ++a)
      for (Vertex b = a + 1; b <= n; ++b)
        for (Vertex c = b + 1; c <= n; ++c)
          for (Vertex d = c + 1; d <= n; ++d) {
            const Quadruple q{a, b, c, d};
            const auto ts = quad_triples(q);
            std::array<std::uint32_t, 4> cells{};
            for (int i = 0; i < 4; ++i)
              cells[i] = static_cast<std::uint32_t>(triple_rank(n, ts[i]));
            const auto id = static_cast<std::uint32_t>(quads.size());
            quads.push_back(q);
            quad_cells.push_back(cells);
            for (auto c2 : cells) cell_quads[c2].push_back(id);
          }
  }
};

class Engine {
 public:
  Engine(const HoleyHT& A, ConstraintSet allowed)
      : index_(A.size()), allowed_(allowed), cells_(A.cells().begin(), A.cells().end()),
        queued_(index_.quads.size(), 0) {}

  const QuadIndex& index() const noexcept { return index_; }
  std::span<const Orientation> cells() const noexcept { return cells_; }
  const SolveStats& stats() const noexcept { return stats_; }
  const std::vector<ForcedValue>& forced_log() const noexcept { return forced_log_; }
  void log_forcing(bool on) noexcept { log_forcing_ = on; }

  HoleyHT snapshot() const {
    HoleyHT out(index_.n);
    for (std::size_t r = 0; r < cells_.size(); ++r) out.set_rank(r, cells_[r]);
    return out;
  }

  void enqueue_all() {
    for (std::uint32_t q = 0; q < index_.quads.size(); ++q) enqueue(q);
  }

  void assign(std::uint32_t cell, Orientation o) {
    cells_[cell] = o;
    trail_.push_back(cell);
    for (auto q : index_.cell_quads[cell]) enqueue(q);
  }

  std::size_t mark() const noexcept { return trail_.size(); }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      cells_[trail_.back()] = Orientation::Hole;
      trail_.pop_back();
    }
    clear_queue();
  }

  // Runs the queue to fixpoint; returns the quad id of a conflict, if any.
  std::optional<std::uint32_t> propagate() {
    while (head_ < queue_.size()) {
      const std::uint32_t q = queue_[head_++];
      queued_[q] = 0;
      const auto& cs = index_.quad_cells[q];
      int hole_slot = -1, holes = 0;
      unsigned mask = 0;
      for (int i = 0; i < 4; ++i) {
        const Orientation o = cells_[cs[i]];
        if (o == Orientation::Hole) {
          ++holes;
          hole_slot = i;
        } else if (o == Orientation::Plus) {
          mask |= 1u << i;
        }
      }
      if (holes == 0) {
        if (!allowed_.contains(four_type_from_mask(mask))) return fail(q);
      } else if (holes == 1) {
        const bool plus_ok = allowed_.contains(four_type_from_mask(mask | (1u << hole_slot)));
        const bool minus_ok = allowed_.contains(four_type_from_mask(mask));
        if (!plus_ok && !minus_ok) return fail(q);
        if (plus_ok != minus_ok) {
          const Orientation o = plus_ok ? Orientation::Plus : Orientation::Minus;
          ++stats_.forced;
          if (log_forcing_) {
            forced_log_.push_back({index_.triples[cs[hole_slot]], o, index_.quads[q]});
          }
          assign(cs[hole_slot], o);
        }
      }
    }
    clear_queue();
    return std::nullopt;
  }

  // Hole in the most 4-subsets whose other three triples are assigned; ties
  // go to the least rank.
  std::optional<std::uint32_t> pick_branch() const {
    std::vector<std::uint32_t> score(cells_.size(), 0);
    bool any = false;
    for (std::size_t q = 0; q < index_.quads.size(); ++q) {
      int holes = 0;
      std::uint32_t last = 0;
      for (auto c : index_.quad_cells[q])
        if (cells_[c] == Orientation::Hole) {
          ++holes;
          last = c;
        }
      if (holes == 1) ++score[last];
    }
    std::optional<std::uint32_t> best;
    for (std::uint32_t c = 0; c < cells_.size(); ++c) {
      if (cells_[c] != Orientation::Hole) continue;
      any = true;
      if (!best || score[c] > score[*best]) best = c;
    }
    return any ? best : std::nullopt;
  }

  bool search() {
    const auto branch = pick_branch();
    if (!branch) return true;
    ++stats_.decisions;
    for (Orientation o : {Orientation::Plus, Orientation::Minus}) {
      const std::size_t m = mark();
      assign(*branch, o);
      if (!propagate() && search()) return true;
      undo(m);
    }
    return false;
  }

  std::vector<Quadruple> certificate() const {
    std::vector<Quadruple> out;
    for (auto q : conflict_quads_) out.push_back(index_.quads[q]);
    return out;
  }

 private:
  void enqueue(std::uint32_t q) {
    if (queued_[q]) return;
    queued_[q] = 1;
    queue_.push_back(q);
  }

  void clear_queue() {
    for (std::size_t i = head_; i < queue_.size(); ++i) queued_[queue_[i]] = 0;
    queue_.clear();
    head_ = 0;
  }

  std::optional<std::uint32_t> fail(std::uint32_t q) {
    ++stats_.conflicts;
    conflict_quads_.insert(q);
    clear_queue();
    return q;
  }

  QuadIndex index_;
  ConstraintSet allowed_;
  std::vector<Orientation> cells_;
  std::vector<std::uint32_t> trail_;
  std::vector<std::uint32_t> queue_;
  std::size_t head_ = 0;
  std::vector<std::uint8_t> queued_;
  std::set<std::uint32_t> conflict_quads_;
  SolveStats stats_;
  bool log_forcing_ = false;
  std::vector<ForcedValue> forced_log_;
};

inline std::vector<Quadruple> violations(const HoleyHT& A, const ConstraintSet& allowed) {
  std::vector<Quadruple> out;
  const QuadIndex idx(A.size());
  for (const auto& q : idx.quads) {
    const auto t = quad_type(A, q);
    if (t && !allowed.contains(*t)) out.push_back(q);
  }
  return out;
}

// Throws if `C` is not a completion of `A`.
inline void check_completion(const HoleyHT& A, const HoleyHT& C, const ConstraintSet& allowed) {
  if (C.size() != A.size() || !C.is_full()) throw std::logic_error("completion has holes");
  for (std::size_t r = 0; r < A.cells().size(); ++r) {
    const Orientation o = A.at_rank(r);
    if (o != Orientation::Hole && C.at_rank(r) != o) {
      throw std::logic_error("completion changed an assigned triple");
    }
  }
  if (!class_member(C, allowed).member) throw std::logic_error("completion leaves the class");
}

}  // namespace detail

inline PropagateResult propagate(const HoleyHT& A, const ConstraintSet& allowed) {
  detail::Engine engine(A, allowed);
  engine.log_forcing(true);
  engine.enqueue_all();
  const auto conflict = engine.propagate();
  PropagateResult r{engine.snapshot(), std::nullopt, engine.forced_log()};
  if (conflict) r.conflict = engine.index().quads[*conflict];
  return r;
}

inline SolveResult complete(const CompletionProblem& P) {
  const HoleyHT& A = P.structure;
  SolveResult result;

  if (A.size() < 4) {
    HoleyHT filled = A;
    for (std::size_t r = 0; r < filled.cells().size(); ++r)
      if (filled.at_rank(r) == Orientation::Hole) filled.set_rank(r, Orientation::Plus);
    result.verdict = Verdict::Sat;
    result.completion = std::move(filled);
    return result;
  }

  if (auto bad = detail::violations(A, P.allowed); !bad.empty()) {
    result.verdict = Verdict::Unsat;
    result.certificate = std::move(bad);
    result.stats.conflicts = result.certificate.size();
    return result;
  }

  detail::Engine engine(A, P.allowed);
  engine.enqueue_all();
  const bool sat = !engine.propagate() && engine.search();
  result.stats = engine.stats();
  if (sat) {
    result.verdict = Verdict::Sat;
    result.completion = engine.snapshot();
    detail::check_completion(A, *result.completion, P.allowed);
  } else {
    result.verdict = Verdict::Unsat;
    result.certificate = engine.certificate();
  }
  return result;
}

inline SolveResult complete(const HoleyHT& A, const ConstraintSet& allowed) {
  return complete(CompletionProblem{A, allowed});
}

inline constexpr std::size_t kEnumerationGuard = 30;

// Every completion, in lexicographic order of hole values by triple rank
// (Plus before Minus). Plain enumeration: a branch is cut only when a 4-subset
// becomes fully assigned with a forbidden type, so this stays independent of
// propagate() and can serve as its oracle.
inline std::vector<HoleyHT> all_completions(const CompletionProblem& P,
                                            std::optional<std::size_t> cap = std::nullopt) {
  const HoleyHT& A = P.structure;
  std::vector<std::uint32_t> holes;
  for (std::uint32_t r = 0; r < A.cells().size(); ++r)
    if (A.at_rank(r) == Orientation::Hole) holes.push_back(r);
  if (holes.size() > kEnumerationGuard && !cap) {
    throw GuardRefusal(std::to_string(holes.size()) + " holes exceed the enumeration guard of " +
                       std::to_string(kEnumerationGuard) + " (set a cap)");
  }

  std::vector<HoleyHT> out;
  if (cap && *cap == 0) return out;
  if (!detail::violations(A, P.allowed).empty()) return out;

  const detail::QuadIndex idx(A.size());
  std::vector<Orientation> cells(A.cells().begin(), A.cells().end());

  auto closes_badly = [&](std::uint32_t cell) {
    for (auto q : idx.cell_quads[cell]) {
      unsigned mask = 0;
      bool full = true;
      for (int i = 0; i < 4; ++i) {
        const Orientation o = cells[idx.quad_cells[q][i]];
        if (o == Orientation::Hole) {
          full = false;
          break;
        }
        if (o == Orientation::Plus) mask |= 1u << i;
      }
      if (full && !P.allowed.contains(four_type_from_mask(mask))) return true;
    }
    return false;
  };

  auto walk = [&](auto&& self, std::size_t k) -> bool {
    if (k == holes.size()) {
      HoleyHT C(A.size());
      for (std::size_t r = 0; r < cells.size(); ++r) C.set_rank(r, cells[r]);
      out.push_back(std::move(C));
      return !(cap && out.size() >= *cap);
    }
    for (Orientation o : {Orientation::Plus, Orientation::Minus}) {
      cells[holes[k]] = o;
      if (!closes_badly(holes[k]) && !self(self, k + 1)) return false;
    }
    cells[holes[k]] = Orientation::Hole;
    return true;
  };
  walk(walk, 0);
  return out;
}

inline std::vector<HoleyHT> all_completions(const HoleyHT& A, const ConstraintSet& allowed,
                                            std::optional<std::size_t> cap = std::nullopt) {
  return all_completions(CompletionProblem{A, allowed}, cap);
}

struct ObstructionReport {
  bool minimal = false;
  SolveResult whole;
  std::vector<SolveResult> deletions;  // deletions[v-1]: structure without vertex v
};

// No completion, while every single-vertex deletion has one. Deeper
// substructures inherit completions by restriction, so this is enough.
inline ObstructionReport is_minimal_obstruction(const HoleyHT& A, const ConstraintSet& allowed,
                                                int jobs = 1) {
  ObstructionReport r;
  r.whole = complete(A, allowed);
  r.deletions = parallel_map(static_cast<std::size_t>(A.size()), jobs, [&](std::size_t i) {
    return complete(induced(A, all_vertices_except(A.size(), static_cast<Vertex>(i + 1))),
                    allowed);
  });
  r.minimal = !r.whole.sat() &&
              std::all_of(r.deletions.begin(), r.deletions.end(),
                          [](const SolveResult& s) { return s.sat(); });
  return r;
}

// Free amalgam over the identified base, then completion. Both factors must
// be full members of the class.
inline SolveResult amalgamate(const HoleyHT& A1, const HoleyHT& A2,
                              std::span<const Vertex> base1, std::span<const Vertex> base2,
                              const ConstraintSet& allowed) {
  for (const HoleyHT* f : {&A1, &A2}) {
    if (!f->is_full()) throw HoleyInput("amalgamation factors must have no holes");
    if (!class_member(*f, allowed).member) throw InputError("amalgamation factor not in class");
  }
  return complete(glue(A1, A2, base1, base2).structure, allowed);
}

inline SolveResult amalgamate(const HoleyHT& A1, const HoleyHT& A2,
                              std::span<const Vertex> base, const ConstraintSet& allowed) {
  return amalgamate(A1, A2, base, base, allowed);
}

}  // namespace htour
