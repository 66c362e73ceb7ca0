#pragma once

// Morphisms of the box category with connections, in coordinate form.
//
// A map [1]^m -> [1]^n is stored as its n coordinate functions. Each one is
// constant 0, constant 1, or the max over a nonempty subset of the domain
// coordinates; supports of successive max-coordinates must be strictly
// ordered (every index of one below every index of the next). Indices are
// 1-based throughout this header.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cubical {

/// Bitmask of domain indices: bit (i - 1) stands for index i.
using Support = std::uint32_t;

/// Largest cube dimension a BoxMap can address.
inline constexpr int kMaxBoxDim = 24;

class Coord {
 public:
  enum class Kind : std::uint8_t { zero, one, max };

  static constexpr Coord zero() { return Coord(Kind::zero, 0); }
  static constexpr Coord one() { return Coord(Kind::one, 0); }
  static constexpr Coord max(Support support) { return Coord(Kind::max, support); }

  constexpr Kind kind() const { return kind_; }
  constexpr Support support() const { return support_; }
  constexpr bool is_const() const { return kind_ != Kind::max; }

  /// Smallest / largest index of a max support. Undefined for constants.
  int min_index() const;
  int max_index() const;

  friend constexpr bool operator==(const Coord&, const Coord&) = default;
  /// Canonical order: 0 < 1 < max, supports compared as sorted sequences.
  friend std::strong_ordering operator<=>(const Coord& a, const Coord& b);

 private:
  constexpr Coord(Kind kind, Support support) : kind_(kind), support_(support) {}

  Kind kind_;
  Support support_;
};

/// True iff `coords` describes a morphism [1]^m -> [1]^n.
bool box_is_valid(int m, int n, std::span<const Coord> coords);

class BoxMap {
 public:
  /// Throws RangeError unless the coordinates form a valid morphism.
  BoxMap(int domain, std::vector<Coord> coords);

  static BoxMap identity(int n);

  int domain() const { return domain_; }
  int codomain() const { return static_cast<int>(coords_.size()); }
  std::span<const Coord> coords() const { return coords_; }
  /// j-th coordinate function, 1-based.
  const Coord& coord(int j) const { return coords_[static_cast<std::size_t>(j - 1)]; }

  friend bool operator==(const BoxMap&, const BoxMap&) = default;
  /// Dimensions first, then lexicographic on coordinates.
  friend std::strong_ordering operator<=>(const BoxMap& a, const BoxMap& b);

 private:
  int domain_;
  std::vector<Coord> coords_;
};

enum class GeneratorKind : std::uint8_t { face, degeneracy, connection };

/// A named generator. `n` is the superscript: the codomain dimension of a
/// face, the domain dimension of a degeneracy or connection.
struct BoxGenerator {
  GeneratorKind kind;
  int n;
  int index;
  int sign = 0;  // faces only

  int domain() const { return kind == GeneratorKind::face ? n - 1 : n; }
  int codomain() const { return kind == GeneratorKind::face ? n : n - 1; }

  friend bool operator==(const BoxGenerator&, const BoxGenerator&) = default;
  friend auto operator<=>(const BoxGenerator&, const BoxGenerator&) = default;
};

/// Coordinate form of a generator. Throws RangeError on an illegal index,
/// on a sign given to a non-face, or on a face without a sign.
BoxMap box_generator(GeneratorKind kind, int n, int i, std::optional<int> sign = std::nullopt);
BoxMap to_map(const BoxGenerator& gen);

BoxMap face(int n, int i, int sign);
BoxMap degeneracy(int n, int i);
BoxMap connection(int n, int i);

/// g after f. Throws CompositionError when f.codomain() != g.domain().
BoxMap compose(const BoxMap& g, const BoxMap& f);

/// Composite of generators listed in application order (first applied first).
/// `domain` is only consulted for the empty word.
BoxMap compose_word(std::span<const BoxGenerator> word, int domain);

/// All morphisms [1]^m -> [1]^n in canonical order.
std::vector<BoxMap> box_enumerate(int m, int n);

/// Evaluates a coordinate at a vertex of [1]^m given as a bitmask.
bool evaluate_coord(const Coord& c, std::uint32_t point);
/// Image of a vertex of [1]^m (bitmask) under f.
std::uint32_t apply_to_point(const BoxMap& f, std::uint32_t point);

struct FaceStep {
  int index;
  int sign;
  friend bool operator==(const FaceStep&, const FaceStep&) = default;
  friend auto operator<=>(const FaceStep&, const FaceStep&) = default;
};

/// Unique factorization faces . connections . degeneracies.
///
/// faces: k_1 > k_2 > ... (positions of the constant coordinates in the
/// codomain). connections: j_1 < j_2 < ... . degeneracies: i_1 > i_2 > ...,
/// the domain coordinates that are dropped. The degeneracy block is applied
/// starting from i_1, so every i refers to a coordinate of the original
/// domain.
struct NormalForm {
  int domain = 0;
  int codomain = 0;
  std::vector<FaceStep> faces;
  std::vector<int> connections;
  std::vector<int> degeneracies;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
  friend auto operator<=>(const NormalForm&, const NormalForm&) = default;
};

NormalForm box_normal_form(const BoxMap& f);
bool nf_is_valid(const NormalForm& nf);
/// Throws RangeError if `nf` is not valid.
BoxMap nf_evaluate(const NormalForm& nf);
/// Generator word of a normal form in application order.
std::vector<BoxGenerator> nf_word(const NormalForm& nf);
/// Every valid normal form [1]^m -> [1]^n, built from the index constraints.
std::vector<NormalForm> nf_enumerate(int m, int n);

/// `(1, max{1,2}, 0)`
std::string render(const Coord& c);
std::string render(const BoxMap& f);
/// `d{i}^{e}`, `s{i}`, `g{i}`
std::string render(const BoxGenerator& g);
/// e.g. `d3^1 d1^0 . g1 g3 . s2`; empty blocks are omitted, `id` if all are.
std::string render(const NormalForm& nf);

/// Inverse of render(BoxMap); the domain must be supplied. Throws ParseError.
BoxMap parse_box_map(std::string_view text, int domain);
/// Parses `d2^1`, `s1`, `g1` with the given superscript. Throws ParseError.
BoxGenerator parse_box_generator(std::string_view text, int n);

}  // namespace cubical
