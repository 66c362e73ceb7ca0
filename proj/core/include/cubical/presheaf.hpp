#pragma once

// Finite, dimension-truncated presheaves on the box category with
// connections (cubical sets) and on the simplex category (simplicial sets).
//
// A presheaf truncated at N stores cells in dimensions 0..N and one action
// table per generating map whose source and target both lie within the
// truncation. Cells carry opaque string identifiers; internally they are
// addressed by their position in the per-dimension list.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cubical/box.hpp"
#include "cubical/simplex.hpp"

namespace cubical {

enum class Flavor : std::uint8_t { cubical, simplicial };

std::string_view to_string(Flavor f);

using CellIndex = std::uint32_t;

enum class OpKind : std::uint8_t { face, degeneracy, connection };

/// One generator action X(g) of a presheaf.
///
/// `dim` is the dimension of the cells the table is applied to. Cubical:
/// face X(d^dim_{index,sign}) : X_dim -> X_{dim-1}; degeneracy
/// X(s^{dim+1}_index) : X_dim -> X_{dim+1}; connection X(g^{dim+1}_index).
/// Simplicial: face d_index : X_dim -> X_{dim-1} (0 <= index <= dim) and
/// degeneracy s_index : X_dim -> X_{dim+1} (0 <= index <= dim).
struct GenOp {
  OpKind kind;
  int dim;
  int index;
  int sign = 0;

  int target_dim() const { return kind == OpKind::face ? dim - 1 : dim + 1; }

  friend bool operator==(const GenOp&, const GenOp&) = default;
  friend auto operator<=>(const GenOp&, const GenOp&) = default;
};

/// Every generator action stored by a presheaf of this flavor and truncation,
/// in a fixed order.
const std::vector<GenOp>& site_ops(Flavor flavor, int truncation);

/// The site map behind a cubical action (a map [1]^target -> [1]^dim).
BoxGenerator box_generator_of(const GenOp& op);
GenOp op_of(const BoxGenerator& g);
/// The site map behind a simplicial action.
SimplexGenerator simplex_generator_of(const GenOp& op);
GenOp op_of(const SimplexGenerator& g);

std::string render(const GenOp& op, Flavor flavor);

class Presheaf {
 public:
  using ActionFn = std::function<CellIndex(const GenOp&, CellIndex)>;

  /// `tables` follow site_ops(flavor, truncation). Throws ValidationError on
  /// duplicate identifiers or tables of the wrong shape or range. Identity
  /// laws are checked separately by validate().
  Presheaf(Flavor flavor, int truncation, std::vector<std::vector<std::string>> ids,
           std::vector<std::vector<CellIndex>> tables);

  /// Fills every table by calling `act`.
  static Presheaf build(Flavor flavor, int truncation, std::vector<std::vector<std::string>> ids, const ActionFn& act);

  Flavor flavor() const { return flavor_; }
  int truncation() const { return truncation_; }

  std::size_t size(int dim) const { return ids_[static_cast<std::size_t>(dim)].size(); }
  std::size_t total_cells() const;
  bool empty() const { return total_cells() == 0; }

  const std::string& id(int dim, CellIndex c) const { return ids_[static_cast<std::size_t>(dim)][c]; }
  const std::vector<std::string>& ids(int dim) const { return ids_[static_cast<std::size_t>(dim)]; }
  std::optional<CellIndex> find(int dim, std::string_view id) const;

  const std::vector<GenOp>& ops() const { return site_ops(flavor_, truncation_); }
  std::span<const CellIndex> table(const GenOp& op) const;
  CellIndex act(const GenOp& op, CellIndex c) const { return table(op)[c]; }

  /// X(u) for a box map u : [1]^m -> [1]^n, sending a cell of dimension n to
  /// dimension m. Both dimensions must lie within the truncation.
  CellIndex act(const BoxMap& u, CellIndex c) const;
  /// X(alpha) for alpha : [m] -> [n].
  CellIndex act(const SimplexMap& alpha, CellIndex c) const;

  friend bool operator==(const Presheaf& a, const Presheaf& b);

 private:
  std::size_t slot(const GenOp& op) const;

  Flavor flavor_;
  int truncation_;
  std::vector<std::vector<std::string>> ids_;
  std::vector<std::unordered_map<std::string, CellIndex>> lookup_;
  std::vector<std::vector<CellIndex>> tables_;
};

using PresheafPtr = std::shared_ptr<const Presheaf>;

inline PresheafPtr share(Presheaf p) { return std::make_shared<const Presheaf>(std::move(p)); }

struct Violation {
  std::string identity;
  int dim;
  std::string witness;

  std::string describe() const;
};

/// Every instance of the site's identities that fails on some cell. Empty
/// iff the tables form a presheaf.
std::vector<Violation> validate(const Presheaf& x);

/// Representable presheaf: cells in dimension m are the site maps into
/// [1]^n (resp. [n]), acted on by precomposition.
Presheaf representable(Flavor flavor, int n, int truncation);
Presheaf empty_presheaf(Flavor flavor, int truncation);
inline Presheaf terminal(Flavor flavor, int truncation) { return representable(flavor, 0, truncation); }

/// Cubical: c is in the image of a degeneracy or a connection. Simplicial:
/// c is in the image of some s_i. Dimension-0 cells are never degenerate.
bool is_degenerate(const Presheaf& x, int dim, CellIndex c);
/// Number of nondegenerate cells per dimension.
std::vector<std::size_t> nondegenerate_counts(const Presheaf& x);

class PresheafMap {
 public:
  /// Throws ValidationError if a component has the wrong size or range, or
  /// if the map fails to commute with some generator action.
  PresheafMap(PresheafPtr source, PresheafPtr target, std::vector<std::vector<CellIndex>> components);

  /// Skips the naturality check; for maps produced by constructions that are
  /// natural by design.
  static PresheafMap trusted(PresheafPtr source, PresheafPtr target, std::vector<std::vector<CellIndex>> components);

  static PresheafMap identity(PresheafPtr x);

  const Presheaf& source() const { return *source_; }
  const Presheaf& target() const { return *target_; }
  const PresheafPtr& source_ptr() const { return source_; }
  const PresheafPtr& target_ptr() const { return target_; }

  CellIndex operator()(int dim, CellIndex c) const { return components_[static_cast<std::size_t>(dim)][c]; }
  const std::vector<CellIndex>& component(int dim) const { return components_[static_cast<std::size_t>(dim)]; }
  const std::vector<std::vector<CellIndex>>& components() const { return components_; }

  /// Shape and commutation failures, empty for a valid map.
  std::vector<std::string> violations() const;

  friend bool operator==(const PresheafMap& a, const PresheafMap& b) {
    return a.components_ == b.components_ && *a.source_ == *b.source_ && *a.target_ == *b.target_;
  }

 private:
  struct Trusted {};
  PresheafMap(Trusted, PresheafPtr source, PresheafPtr target, std::vector<std::vector<CellIndex>> components);

  PresheafPtr source_;
  PresheafPtr target_;
  std::vector<std::vector<CellIndex>> components_;
};

/// g after f. Throws CompositionError unless f.target() == g.source().
PresheafMap compose(const PresheafMap& g, const PresheafMap& f);

bool is_mono(const PresheafMap& f);
bool is_epi(const PresheafMap& f);
bool is_iso(const PresheafMap& f);

struct PushoutResult {
  PresheafPtr object;
  PresheafMap from_left;   // B -> P
  PresheafMap from_right;  // C -> P
};

/// Degreewise pushout of B <- A -> C. Throws PreconditionError when the two
/// maps do not share a source or live on different sites/truncations.
PushoutResult pushout(const PresheafMap& f, const PresheafMap& g);

/// Does the commuting square h.f = k.g (f: A->B, g: A->C, h: B->D,
/// k: C->D) exhibit D as a pushout? Throws PreconditionError if the square
/// does not commute.
bool is_pushout_square(const PresheafMap& f, const PresheafMap& g, const PresheafMap& h, const PresheafMap& k);

/// The comparison map from the computed pushout to D.
PresheafMap pushout_comparison(const PresheafMap& f, const PresheafMap& g, const PresheafMap& h, const PresheafMap& k);

struct ProductResult {
  PresheafPtr object;
  PresheafMap first;
  PresheafMap second;
};

/// Cartesian product; cells are pairs ordered with the first factor major.
ProductResult product(const PresheafPtr& x, const PresheafPtr& y);

/// The map into a product induced by two maps with a common source.
PresheafMap pair_map(const PresheafMap& f, const PresheafMap& g, const ProductResult& prod);

struct CellRef {
  int dim;
  CellIndex index;
  friend bool operator==(const CellRef&, const CellRef&) = default;
};

/// Closure of `generators` under every action, with its inclusion. Cells
/// keep their identifiers and relative order. Throws RangeError on a cell
/// reference that does not exist.
PresheafMap subobject(const PresheafPtr& x, std::span<const CellRef> generators);

/// The image of a map, as a subobject of its target.
PresheafMap image(const PresheafMap& f);

}  // namespace cubical
