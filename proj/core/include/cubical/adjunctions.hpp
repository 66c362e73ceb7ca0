#pragma once

// The left Kan extension Q of the cosimplicial object Q^*, its right adjoint
// (written `integral` here), the unit and counit, the geometric product, and
// the triangulation adjunction T -| U.
//
// Every coend is computed as a quotient of explicit index pairs by a
// union-find closure of the generating relations.

#include <vector>

#include "cubical/box.hpp"
#include "cubical/presheaf.hpp"
#include "cubical/simplex.hpp"

namespace cubical {

/// x = X(eta)(z) with z nondegenerate and eta surjective.
struct EzDecomposition {
  int dim;
  CellIndex cell;
  SimplexMap eta;
};
EzDecomposition ez_decompose(const Presheaf& x, int dim, CellIndex c);

/// Q applied to a simplicial presheaf, with access to the classes of the
/// coend. The input must have no nondegenerate simplices above its
/// truncation; the output is truncated at `truncation`.
class QPresentation {
 public:
  QPresentation(PresheafPtr source, int truncation);

  const PresheafPtr& source() const { return source_; }
  const PresheafPtr& object() const { return object_; }

  /// Class of (x, u) for an arbitrary simplex x of dimension n and a box map
  /// u : [1]^m -> [1]^n.
  CellIndex class_of(int n, CellIndex x, const BoxMap& u) const;

  /// First-found representative of a class: a nondegenerate simplex and a
  /// canonical box map.
  struct Representative {
    int dim;
    CellIndex simplex;
    BoxMap shape;
  };
  Representative representative(int m, CellIndex cls) const;

 private:
  struct Generator {
    int dim;
    CellIndex cell;
  };
  std::size_t pair_index(int m, std::size_t gen, const BoxMap& u) const;
  std::size_t generator_of(int dim, CellIndex cell) const;

  PresheafPtr source_;
  int truncation_;
  std::vector<Generator> gens_;
  std::vector<std::vector<std::vector<BoxMap>>> shapes_;  // [m][n]
  std::vector<std::vector<std::size_t>> offsets_;         // [m][gen]
  std::vector<std::vector<std::size_t>> labels_;          // [m][pair]
  std::vector<std::vector<std::size_t>> first_pair_;      // [m][class]
  PresheafPtr object_;
};

PresheafPtr apply_Q(const PresheafPtr& x, int truncation);
/// Q on a map, between the given presentations of its source and target.
PresheafMap apply_Q(const PresheafMap& f, const QPresentation& src, const QPresentation& dst);
PresheafMap apply_Q(const PresheafMap& f, int truncation);

/// The simplicial set of cells descending to maps out of Q^n; simplices
/// keep the identifiers of the underlying cubical cells.
PresheafPtr apply_int(const PresheafPtr& x, int truncation);
PresheafMap apply_int(const PresheafMap& f, int truncation);

/// X -> int Q X.
PresheafMap unit(const PresheafPtr& x, int truncation);
/// Q int X -> X.
PresheafMap counit(const PresheafPtr& x, int truncation);

/// Q(A x B) -> QA x QB induced by the projections.
PresheafMap product_comparison(const PresheafPtr& a, const PresheafPtr& b, int truncation);

/// f (x) g : [1]^{a+c} -> [1]^{b+d}.
BoxMap box_tensor(const BoxMap& f, const BoxMap& g);

/// Geometric product. Index triples (x, y, u) range over x in X_p, y in Y_q,
/// u in box(m, p+q) with p + q <= truncation + 1.
PresheafPtr geometric_product(const PresheafPtr& x, const PresheafPtr& y, int truncation);

/// Nerve of the poset [1]^n, i.e. (Delta^1)^n; k-simplices are chains of
/// k+1 points.
PresheafPtr cube_nerve(int n, int truncation);

/// Triangulation of a cubical presheaf with no nondegenerate cells above its
/// truncation.
PresheafPtr triangulate(const PresheafPtr& x, int truncation);

/// U X: n-cells are maps (Delta^1)^n -> X. Needs X truncated at least at
/// `truncation`.
PresheafPtr u_functor(const PresheafPtr& x, int truncation);

}  // namespace cubical
