#pragma once

// Four-vertex types and 4-constrained classes.

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "htour/core.hpp"

namespace htour {

enum class FourType : std::uint8_t { H4 = 0, O4 = 1, C4 = 2 };

inline constexpr std::array<FourType, 3> kAllFourTypes{FourType::H4, FourType::O4,
                                                       FourType::C4};

constexpr std::string_view to_string(FourType t) noexcept {
  switch (t) {
    case FourType::H4: return "H4";
    case FourType::O4: return "O4";
    default: return "C4";
  }
}

// Type of a full 4-vertex structure from the Plus bits of its triples,
// listed as (abc, abd, acd, bcd) for a<b<c<d. Under the natural order a Plus
// triple is exactly a hyperedge of the hat hypergraph, so: odd count is O4,
// {abc,acd} or {abd,bcd} is H4, anything else is C4.
constexpr FourType four_type_from_mask(unsigned plus_mask) noexcept {
  plus_mask &= 0xF;
  if (std::popcount(plus_mask) % 2 == 1) return FourType::O4;
  if (plus_mask == 0b0101 || plus_mask == 0b1010) return FourType::H4;
  return FourType::C4;
}

// A nonempty subset of {H4, O4, C4}.
class ConstraintSet {
 public:
  constexpr ConstraintSet() = default;

  static ConstraintSet of(std::initializer_list<FourType> types) {
    std::uint8_t m = 0;
    for (FourType t : types) m |= bit(t);
    return from_mask(m);
  }
  static ConstraintSet from_mask(std::uint8_t mask) {
    if ((mask & 0x7) == 0 || (mask & ~0x7) != 0) {
      throw InputError("constraint set must be a nonempty subset of {H4,O4,C4}");
    }
    ConstraintSet s;
    s.mask_ = mask;
    return s;
  }
  static ConstraintSet all() { return from_mask(0x7); }
  static ConstraintSet h4_free() { return of({FourType::C4, FourType::O4}); }
  static ConstraintSet cyclic() { return of({FourType::C4}); }
  static ConstraintSet even() { return of({FourType::C4, FourType::H4}); }

  // Parses a comma-separated list such as "C4,O4".
  static ConstraintSet parse(std::string_view text) {
    std::uint8_t m = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view item = text.substr(start, end - start);
      while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
      while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
      if (item == "H4" || item == "h4") m |= bit(FourType::H4);
      else if (item == "O4" || item == "o4") m |= bit(FourType::O4);
      else if (item == "C4" || item == "c4") m |= bit(FourType::C4);
      else throw InputError("unknown 4-type '" + std::string(item) + "'");
      start = end + 1;
    }
    return from_mask(m);
  }

  constexpr bool contains(FourType t) const noexcept { return (mask_ & bit(t)) != 0; }
  constexpr std::uint8_t mask() const noexcept { return mask_; }

  constexpr bool subset_of(const ConstraintSet& o) const noexcept {
    return (mask_ & ~o.mask_) == 0;
  }

  // The four sets whose classes have strong amalgamation: exactly those
  // containing C4.
  constexpr bool is_amalgamation_class() const noexcept {
    return contains(FourType::C4);
  }

  // Canonical text, e.g. "C4,O4".
  std::string to_string() const {
    std::string out;
    for (FourType t : {FourType::C4, FourType::O4, FourType::H4}) {
      if (!contains(t)) continue;
      if (!out.empty()) out += ',';
      out += htour::to_string(t);
    }
    return out;
  }

  constexpr bool operator==(const ConstraintSet&) const = default;

 private:
  static constexpr std::uint8_t bit(FourType t) noexcept {
    return static_cast<std::uint8_t>(1u << static_cast<unsigned>(t));
  }

  std::uint8_t mask_ = 0x7;
};

using Quadruple = std::array<Vertex, 4>;

// The four triples of a sorted quadruple, in (abc, abd, acd, bcd) order.
inline std::array<Triple, 4> quad_triples(const Quadruple& q) noexcept {
  const auto [a, b, c, d] = q;
  return {Triple{a, b, c}, Triple{a, b, d}, Triple{a, c, d}, Triple{b, c, d}};
}

// Type of the substructure on quadruple q, or nullopt when any of its
// triples is a hole.
inline std::optional<FourType> quad_type(const HoleyHT& A, const Quadruple& q) {
  unsigned mask = 0;
  const auto ts = quad_triples(q);
  for (int i = 0; i < 4; ++i) {
    const Orientation o = A.at(ts[i]);
    if (o == Orientation::Hole) return std::nullopt;
    if (o == Orientation::Plus) mask |= 1u << i;
  }
  return four_type_from_mask(mask);
}

inline FourType four_type(const HoleyHT& A) {
  if (A.size() != 4) throw InputError("four_type needs exactly 4 vertices");
  if (!A.is_full()) throw HoleyInput("four_type needs a structure without holes");
  return *quad_type(A, {1, 2, 3, 4});
}

struct Census4 {
  int total = 0;
  std::array<int, 3> counts{};  // indexed by FourType

  int count(FourType t) const { return counts[static_cast<int>(t)]; }
};

// Classifies all 16 labeled orientation assignments on 4 vertices.
inline Census4 census4() {
  Census4 c;
  for (unsigned m = 0; m < 16; ++m) {
    HoleyHT A(4);
    const auto ts = quad_triples({1, 2, 3, 4});
    for (int i = 0; i < 4; ++i)
      A.set(ts[i], (m >> i) & 1u ? Orientation::Plus : Orientation::Minus);
    ++c.total;
    ++c.counts[static_cast<int>(four_type(A))];
  }
  return c;
}

struct Membership {
  bool member = true;
  std::optional<Quadruple> witness;  // lexicographically least offender
  std::optional<FourType> witness_type;
};

// Every fully assigned 4-subset must have its type in `allowed`.
inline Membership class_member(const HoleyHT& A, const ConstraintSet& allowed) {
  const int n = A.size();
  for (Vertex a = 1; a <= n; ++a)
    for (Vertex b = a + 1; b <= n; ++b)
      for (Vertex c = b + 1; c <= n; ++c)
        for (Vertex d = c + 1; d <= n; ++d) {
          const Quadruple q{a, b, c, d};
          const auto t = quad_type(A, q);
          if (t && !allowed.contains(*t)) return {false, q, t};
        }
  return {};
}

}  // namespace htour
