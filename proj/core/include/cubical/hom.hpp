#pragma once

// Enumeration of presheaf maps by backtracking over cells, highest dimension
// first, with every assignment propagated along all stored actions.

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "cubical/presheaf.hpp"

namespace cubical {

struct SearchOptions {
  /// Per dimension, cells whose image is fixed in advance.
  std::vector<std::vector<std::optional<CellIndex>>> forced;
  /// Candidate filter: may cell `c` of dimension `dim` go to `t`?
  std::function<bool(int dim, CellIndex c, CellIndex t)> allow;
  bool injective = false;
  std::size_t limit = std::numeric_limits<std::size_t>::max();
};

/// All maps x -> y satisfying the options, in a deterministic order.
std::vector<PresheafMap> search_maps(const PresheafPtr& x, const PresheafPtr& y, const SearchOptions& options = {});

std::vector<PresheafMap> hom_set(const PresheafPtr& x, const PresheafPtr& y);
std::size_t hom_count(const PresheafPtr& x, const PresheafPtr& y);

std::optional<PresheafMap> find_iso(const PresheafPtr& x, const PresheafPtr& y);
inline bool isomorphic(const PresheafPtr& x, const PresheafPtr& y) { return find_iso(x, y).has_value(); }

}  // namespace cubical
