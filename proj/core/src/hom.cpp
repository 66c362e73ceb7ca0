#include "cubical/hom.hpp"

#include <algorithm>

#include "cubical/error.hpp"

namespace cubical {

namespace {

constexpr CellIndex kUnset = std::numeric_limits<CellIndex>::max();

class Search {
 public:
  Search(const PresheafPtr& x, const PresheafPtr& y, const SearchOptions& opt) : x_(x), y_(y), opt_(opt) {
    const int n = x->truncation();
    ops_by_dim_.resize(static_cast<std::size_t>(n + 1));
    for (const GenOp& op : x->ops()) ops_by_dim_[static_cast<std::size_t>(op.dim)].push_back(op);
    assign_.resize(static_cast<std::size_t>(n + 1));
    used_.resize(static_cast<std::size_t>(n + 1));
    for (int d = 0; d <= n; ++d) {
      assign_[static_cast<std::size_t>(d)].assign(x->size(d), kUnset);
      used_[static_cast<std::size_t>(d)].assign(y->size(d), false);
    }
    // Nondegenerate cells top-down, then everything else bottom-up.
    for (int d = n; d >= 0; --d) {
      for (CellIndex c = 0; c < x->size(d); ++c) {
        if (!is_degenerate(*x, d, c)) order_.push_back({d, c});
      }
    }
    for (int d = 0; d <= n; ++d) {
      for (CellIndex c = 0; c < x->size(d); ++c) {
        if (is_degenerate(*x, d, c)) order_.push_back({d, c});
      }
    }
  }

  std::vector<PresheafMap> run() {
    for (std::size_t d = 0; d < opt_.forced.size() && d < assign_.size(); ++d) {
      for (std::size_t c = 0; c < opt_.forced[d].size(); ++c) {
        if (!opt_.forced[d][c]) continue;
        if (!assign(static_cast<int>(d), static_cast<CellIndex>(c), *opt_.forced[d][c])) return {};
      }
    }
    recurse(0);
    return std::move(found_);
  }

 private:
  bool assign(int dim, CellIndex c, CellIndex t) {
    std::vector<CellRef> queue{{dim, c}};
    if (!set(dim, c, t)) return false;
    while (!queue.empty()) {
      const CellRef cur = queue.back();
      queue.pop_back();
      const CellIndex img = assign_[static_cast<std::size_t>(cur.dim)][cur.index];
      for (const GenOp& op : ops_by_dim_[static_cast<std::size_t>(cur.dim)]) {
        const int td = op.target_dim();
        const CellIndex src = x_->act(op, cur.index);
        const CellIndex want = y_->act(op, img);
        const CellIndex have = assign_[static_cast<std::size_t>(td)][src];
        if (have == kUnset) {
          if (!set(td, src, want)) return false;
          queue.push_back({td, src});
        } else if (have != want) {
          return false;
        }
      }
    }
    return true;
  }

  bool set(int dim, CellIndex c, CellIndex t) {
    const auto d = static_cast<std::size_t>(dim);
    if (assign_[d][c] != kUnset) return assign_[d][c] == t;
    if (opt_.allow && !opt_.allow(dim, c, t)) return false;
    if (opt_.injective) {
      if (used_[d][t]) return false;
      used_[d][t] = true;
    }
    assign_[d][c] = t;
    trail_.push_back({dim, c});
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const CellRef r = trail_.back();
      trail_.pop_back();
      const auto d = static_cast<std::size_t>(r.dim);
      if (opt_.injective) used_[d][assign_[d][r.index]] = false;
      assign_[d][r.index] = kUnset;
    }
  }

  void recurse(std::size_t pos) {
    if (found_.size() >= opt_.limit) return;
    while (pos < order_.size() && assign_[static_cast<std::size_t>(order_[pos].dim)][order_[pos].index] != kUnset) ++pos;
    if (pos == order_.size()) {
      found_.push_back(PresheafMap::trusted(x_, y_, assign_));
      return;
    }
    const CellRef cell = order_[pos];
    for (CellIndex t = 0; t < y_->size(cell.dim); ++t) {
      const std::size_t mark = trail_.size();
      if (assign(cell.dim, cell.index, t)) recurse(pos + 1);
      undo(mark);
      if (found_.size() >= opt_.limit) return;
    }
  }

  PresheafPtr x_;
  PresheafPtr y_;
  const SearchOptions& opt_;
  std::vector<std::vector<GenOp>> ops_by_dim_;
  std::vector<std::vector<CellIndex>> assign_;
  std::vector<std::vector<bool>> used_;
  std::vector<CellRef> order_;
  std::vector<CellRef> trail_;
  std::vector<PresheafMap> found_;
};

}  // namespace

std::vector<PresheafMap> search_maps(const PresheafPtr& x, const PresheafPtr& y, const SearchOptions& options) {
  if (x->flavor() != y->flavor() || x->truncation() != y->truncation()) {
    throw PreconditionError("hom search needs presheaves on the same site with equal truncation");
  }
  return Search(x, y, options).run();
}

std::vector<PresheafMap> hom_set(const PresheafPtr& x, const PresheafPtr& y) { return search_maps(x, y); }

std::size_t hom_count(const PresheafPtr& x, const PresheafPtr& y) { return hom_set(x, y).size(); }

std::optional<PresheafMap> find_iso(const PresheafPtr& x, const PresheafPtr& y) {
  if (x->flavor() != y->flavor() || x->truncation() != y->truncation()) return std::nullopt;
  for (int d = 0; d <= x->truncation(); ++d) {
    if (x->size(d) != y->size(d)) return std::nullopt;
  }
  SearchOptions opt;
  opt.injective = true;
  opt.limit = 1;
  auto maps = search_maps(x, y, opt);
  if (maps.empty()) return std::nullopt;
  return std::move(maps.front());
}

}  // namespace cubical
