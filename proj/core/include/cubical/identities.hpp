#pragma once

// The co-cubical identities of the box category with connections, as a
// generator of concrete instances. Each side is a word written in
// composition order (the rightmost generator is applied first).

#include <optional>
#include <string>
#include <vector>

#include "cubical/box.hpp"

namespace cubical {

enum class IdentityReading {
  /// gamma_j d_{i,1} = d_{i,1} s_i and gamma_j d_{i,e} = d_{j,e} gamma_{j-1}.
  /// Both are wrong; used to confirm that the checker rejects them.
  misindexed,
  /// gamma_j d_{i,1} = d_{j,1} s_j for j in {i-1, i}, and
  /// gamma_j d_{i,e} = d_{i,e} gamma_{j-1} for j > i.
  corrected,
};

struct IdentityInstance {
  std::string family;       // e.g. "g_j d_{i,e} (j>i)"
  std::string text;         // the instance, e.g. "g2 d1^0 = d1^0 g1" on [1]^2
  int domain = 0;
  std::vector<BoxGenerator> lhs;  // composition order, superscripts filled in
  std::optional<std::vector<BoxGenerator>> rhs;  // nullopt: right side has an illegal index
};

/// Every instance whose left side is legal and stays within dimensions
/// 0..max_dim.
std::vector<IdentityInstance> cocubical_identities(int max_dim, IdentityReading reading);

/// Composite of a word in composition order starting from [1]^domain.
BoxMap compose_written(const std::vector<BoxGenerator>& word, int domain);

/// True iff both sides are legal and compose to the same map.
bool identity_holds(const IdentityInstance& inst);

}  // namespace cubical
