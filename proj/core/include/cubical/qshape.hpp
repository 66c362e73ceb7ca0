#pragma once

// The quotients Q^n of the representable cubes, their cosimplicial
// structure, and the descent condition for maps out of them.

#include "cubical/box.hpp"
#include "cubical/presheaf.hpp"
#include "cubical/simplex.hpp"

namespace cubical {

/// Every coordinate after the first constant 1 becomes 1.
BoxMap canonicalize(const BoxMap& f);
inline bool is_canonical(const BoxMap& f) { return canonicalize(f) == f; }

/// Canonical representatives [1]^m -> [1]^n in enumeration order.
std::vector<BoxMap> q_cells(int m, int n);

/// Q^n truncated at `truncation`; cell identifiers render representatives.
Presheaf q_object(int n, int truncation);
PresheafPtr q_object_ptr(int n, int truncation);

/// The quotient map from the representable cube.
PresheafMap pi(int n, int truncation);

/// Box map inducing a coface or codegeneracy of Q^*.
BoxMap cosimplicial_generator(const SimplexGenerator& g);
/// Box map [1]^m -> [1]^n inducing Q^alpha for alpha : [m] -> [n].
BoxMap cosimplicial_box_map(const SimplexMap& alpha);
/// Q^alpha : Q^m -> Q^n.
PresheafMap cosimplicial_map(const SimplexMap& alpha, int truncation);

/// Does the n-cell x of a cubical presheaf define a map Q^n -> X?
bool descends(const Presheaf& x, int dim, CellIndex c);

}  // namespace cubical
