#pragma once

// Generating (acyclic) cofibrations and their Q-images, lifting problems,
// the 2-cube cofibrancy obstruction, and verifiers for the degeneracy
// pushout squares and for pushouts along Q-images of horns.

#include <optional>
#include <set>
#include <vector>

#include "cubical/adjunctions.hpp"
#include "cubical/presheaf.hpp"
#include "cubical/report.hpp"

namespace cubical {

enum class ShapeKind { boundary_simplex, horn, boundary_cube, open_box };

/// Subobject of a representable with its inclusion. Horns take `index` in
/// 0..n; open boxes take `index` in 1..n and `sign`.
PresheafMap shape_subobject(ShapeKind kind, int n, int truncation, int index = 0, int sign = 0);

/// The map of representables induced by a box map h : [1]^k -> [1]^m.
PresheafMap representable_map(const BoxMap& h, int truncation);
/// Q^k -> Q^m induced by h; throws ValidationError if h does not descend.
PresheafMap q_map(const BoxMap& h, int truncation);

/// Q Delta^n -> Q^n, class (x, u) to the canonical form of Q^x after u.
PresheafMap q_simplex_iso(const QPresentation& q_simplex, int n);

enum class QGeneratorKind { boundary, horn };
/// Q of the boundary or horn inclusion, landing in Q^n.
PresheafMap q_generator(QGeneratorKind kind, int n, int truncation, int index = 0);

struct LiftingProblem {
  PresheafMap i;     // A -> B
  PresheafMap p;     // X -> Y
  PresheafMap base;  // A -> X
  PresheafMap over;  // B -> Y
};

/// Diagonals B -> X with d i = base and p d = over. Returns at most one
/// unless `all`. Throws PreconditionError if the square does not commute.
std::vector<PresheafMap> solve_lifting(const LiftingProblem& problem, bool all = false);

/// The square with i : empty -> cube^n, p = Q(boundary) -> Q^n, over = pi_n.
LiftingProblem no_lift_problem(int n, int truncation);

/// 2-cells whose four principal faces are all nondegenerate.
std::vector<CellIndex> cofibrancy_obstruction(const Presheaf& x);

/// C from the degeneracy-square construction.
std::set<int> degeneracy_square_c(int k, const std::set<int>& a, const std::set<int>& b);
/// Projection [1]^k -> [1]^{k-|drop|} deleting the coordinates in `drop`
/// from the coordinates `keep` (ambient indices).
BoxMap projection(const std::set<int>& keep, const std::set<int>& drop);

/// Both degeneracy squares for every A, B in {1..k}, plus the factorization
/// of squares through them for all pairs of maps out of cube^k into cubes of
/// dimension <= k.
Report verify_degeneracy_pushouts(int k);

/// Y = Q^n cup_{Q horn} X; checks that the integral of the square is a
/// pushout and that it agrees with Delta^n cup_{horn} (integral X).
Report verify_ac_pushout(int n, int i, const PresheafMap& attach, int truncation);

}  // namespace cubical
