#pragma once

// Integer homology of finite simplicial sets via normalized chains and Smith
// normal form. Arithmetic is exact; overflow throws.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubical/presheaf.hpp"

namespace cubical {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

struct ChainComplex {
  /// Nondegenerate simplices per dimension.
  std::vector<std::vector<CellIndex>> basis;
  /// boundary[n] : C_n -> C_{n-1}, rows indexed by basis[n-1]; boundary[0]
  /// is empty.
  std::vector<IntMatrix> boundary;
};

ChainComplex chain_complex(const Presheaf& x);

/// Nonzero invariant factors d_1 | d_2 | ..., all positive.
std::vector<std::int64_t> smith_normal_form(IntMatrix m);

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b, std::size_t inner);

struct HomologyGroup {
  std::size_t betti = 0;
  std::vector<std::int64_t> torsion;
  bool is_zero() const { return betti == 0 && torsion.empty(); }
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

struct HomologyResult {
  bool reduced = false;
  std::vector<HomologyGroup> groups;  // H_0 .. H_{N-1}
  /// Reduced homology in degree -1 (nonzero only for the empty set).
  HomologyGroup minus_one;
  bool acyclic() const;
};

/// Throws PreconditionError if X has a nondegenerate simplex in its top
/// dimension, since the homology below could then be incomplete.
HomologyResult homology(const Presheaf& x, bool reduced = false);

/// `Z^b ⊕ Z/d1 ⊕ ...`, or `0`.
std::string render(const HomologyGroup& g);

}  // namespace cubical
