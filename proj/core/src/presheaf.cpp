#include "cubical/presheaf.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "cubical/error.hpp"
#include "cubical/union_find.hpp"

namespace cubical {

namespace {

constexpr int kMaxTruncation = 12;

std::vector<GenOp> make_site_ops(Flavor flavor, int n_max) {
  std::vector<GenOp> ops;
  for (int dim = 0; dim <= n_max; ++dim) {
    if (flavor == Flavor::cubical) {
      if (dim >= 1) {
        for (int i = 1; i <= dim; ++i) {
          ops.push_back({OpKind::face, dim, i, 0});
          ops.push_back({OpKind::face, dim, i, 1});
        }
      }
      if (dim + 1 <= n_max) {
        for (int i = 1; i <= dim + 1; ++i) ops.push_back({OpKind::degeneracy, dim, i, 0});
        for (int i = 1; i <= dim; ++i) ops.push_back({OpKind::connection, dim, i, 0});
      }
    } else {
      if (dim >= 1) {
        for (int i = 0; i <= dim; ++i) ops.push_back({OpKind::face, dim, i, 0});
      }
      if (dim + 1 <= n_max) {
        for (int i = 0; i <= dim; ++i) ops.push_back({OpKind::degeneracy, dim, i, 0});
      }
    }
  }
  std::sort(ops.begin(), ops.end());
  return ops;
}

struct SiteTables {
  std::array<std::array<std::vector<GenOp>, kMaxTruncation + 1>, 2> ops;
  SiteTables() {
    for (int n = 0; n <= kMaxTruncation; ++n) {
      ops[0][static_cast<std::size_t>(n)] = make_site_ops(Flavor::cubical, n);
      ops[1][static_cast<std::size_t>(n)] = make_site_ops(Flavor::simplicial, n);
    }
  }
};

// Word of actions to apply (first element first) realizing X(u).
std::vector<GenOp> contravariant_ops(const BoxMap& u) {
  const auto word = nf_word(box_normal_form(u));
  std::vector<GenOp> ops;
  ops.reserve(word.size());
  for (auto it = word.rbegin(); it != word.rend(); ++it) ops.push_back(op_of(*it));
  return ops;
}

std::vector<GenOp> contravariant_ops(const SimplexMap& alpha) {
  const auto word = simplex_word(alpha);
  std::vector<GenOp> ops;
  ops.reserve(word.size());
  for (auto it = word.rbegin(); it != word.rend(); ++it) ops.push_back(op_of(*it));
  return ops;
}

}  // namespace

std::string_view to_string(Flavor f) { return f == Flavor::cubical ? "cubical" : "simplicial"; }

const std::vector<GenOp>& site_ops(Flavor flavor, int truncation) {
  static const SiteTables tables;
  if (truncation < 0 || truncation > kMaxTruncation) {
    throw RangeError("truncation " + std::to_string(truncation) + " outside 0.." + std::to_string(kMaxTruncation));
  }
  return tables.ops[flavor == Flavor::cubical ? 0 : 1][static_cast<std::size_t>(truncation)];
}

BoxGenerator box_generator_of(const GenOp& op) {
  switch (op.kind) {
    case OpKind::face: return {GeneratorKind::face, op.dim, op.index, op.sign};
    case OpKind::degeneracy: return {GeneratorKind::degeneracy, op.dim + 1, op.index, 0};
    case OpKind::connection: return {GeneratorKind::connection, op.dim + 1, op.index, 0};
  }
  throw RangeError("bad op kind");
}

GenOp op_of(const BoxGenerator& g) {
  switch (g.kind) {
    case GeneratorKind::face: return {OpKind::face, g.n, g.index, g.sign};
    case GeneratorKind::degeneracy: return {OpKind::degeneracy, g.n - 1, g.index, 0};
    case GeneratorKind::connection: return {OpKind::connection, g.n - 1, g.index, 0};
  }
  throw RangeError("bad generator kind");
}

SimplexGenerator simplex_generator_of(const GenOp& op) {
  if (op.kind == OpKind::face) return {true, op.dim, op.index};
  if (op.kind == OpKind::degeneracy) return {false, op.dim, op.index};
  throw RangeError("simplicial sets have no connections");
}

GenOp op_of(const SimplexGenerator& g) {
  return g.is_face ? GenOp{OpKind::face, g.n, g.index, 0} : GenOp{OpKind::degeneracy, g.n, g.index, 0};
}

std::string render(const GenOp& op, Flavor flavor) {
  std::string s;
  if (flavor == Flavor::cubical) s = render(box_generator_of(op));
  else s = (op.kind == OpKind::face ? "d" : "s") + std::to_string(op.index);
  return s + "@" + std::to_string(op.dim);
}

Presheaf::Presheaf(Flavor flavor, int truncation, std::vector<std::vector<std::string>> ids,
                   std::vector<std::vector<CellIndex>> tables)
    : flavor_(flavor), truncation_(truncation), ids_(std::move(ids)), tables_(std::move(tables)) {
  const auto& op_list = site_ops(flavor_, truncation_);
  if (ids_.size() != static_cast<std::size_t>(truncation_ + 1)) {
    throw ValidationError("presheaf: expected cells for dimensions 0.." + std::to_string(truncation_));
  }
  lookup_.resize(ids_.size());
  for (std::size_t d = 0; d < ids_.size(); ++d) {
    for (std::size_t c = 0; c < ids_[d].size(); ++c) {
      if (!lookup_[d].emplace(ids_[d][c], static_cast<CellIndex>(c)).second) {
        throw ValidationError("presheaf: duplicate cell identifier '" + ids_[d][c] + "' in dimension " +
                              std::to_string(d));
      }
    }
  }
  if (tables_.size() != op_list.size()) throw ValidationError("presheaf: wrong number of action tables");
  for (std::size_t s = 0; s < op_list.size(); ++s) {
    const GenOp& op = op_list[s];
    if (tables_[s].size() != size(op.dim)) {
      throw ValidationError("presheaf: table " + render(op, flavor_) + " has " + std::to_string(tables_[s].size()) +
                            " entries, expected " + std::to_string(size(op.dim)));
    }
    for (CellIndex v : tables_[s]) {
      if (v >= size(op.target_dim())) {
        throw ValidationError("presheaf: table " + render(op, flavor_) + " points outside dimension " +
                              std::to_string(op.target_dim()));
      }
    }
  }
}

Presheaf Presheaf::build(Flavor flavor, int truncation, std::vector<std::vector<std::string>> ids, const ActionFn& act) {
  const auto& op_list = site_ops(flavor, truncation);
  std::vector<std::vector<CellIndex>> tables;
  tables.reserve(op_list.size());
  for (const GenOp& op : op_list) {
    std::vector<CellIndex> t(ids[static_cast<std::size_t>(op.dim)].size());
    for (std::size_t c = 0; c < t.size(); ++c) t[c] = act(op, static_cast<CellIndex>(c));
    tables.push_back(std::move(t));
  }
  return Presheaf(flavor, truncation, std::move(ids), std::move(tables));
}

std::size_t Presheaf::total_cells() const {
  std::size_t n = 0;
  for (const auto& d : ids_) n += d.size();
  return n;
}

std::optional<CellIndex> Presheaf::find(int dim, std::string_view id) const {
  if (dim < 0 || dim > truncation_) return std::nullopt;
  const auto& m = lookup_[static_cast<std::size_t>(dim)];
  auto it = m.find(std::string(id));
  if (it == m.end()) return std::nullopt;
  return it->second;
}

std::size_t Presheaf::slot(const GenOp& op) const {
  const auto& op_list = ops();
  auto it = std::lower_bound(op_list.begin(), op_list.end(), op);
  if (it == op_list.end() || *it != op) {
    throw RangeError("presheaf has no action " + render(op, flavor_) + " at truncation " + std::to_string(truncation_));
  }
  return static_cast<std::size_t>(it - op_list.begin());
}

std::span<const CellIndex> Presheaf::table(const GenOp& op) const { return tables_[slot(op)]; }

CellIndex Presheaf::act(const BoxMap& u, CellIndex c) const {
  if (flavor_ != Flavor::cubical) throw PreconditionError("box map acting on a simplicial set");
  if (u.domain() > truncation_ || u.codomain() > truncation_) {
    throw RangeError("box map " + render(u) + " exceeds truncation " + std::to_string(truncation_));
  }
  for (const GenOp& op : contravariant_ops(u)) c = act(op, c);
  return c;
}

CellIndex Presheaf::act(const SimplexMap& alpha, CellIndex c) const {
  if (flavor_ != Flavor::simplicial) throw PreconditionError("simplex map acting on a cubical set");
  if (alpha.domain() > truncation_ || alpha.codomain() > truncation_) {
    throw RangeError("simplex map " + render(alpha) + " exceeds truncation " + std::to_string(truncation_));
  }
  for (const GenOp& op : contravariant_ops(alpha)) c = act(op, c);
  return c;
}

bool operator==(const Presheaf& a, const Presheaf& b) {
  return a.flavor_ == b.flavor_ && a.truncation_ == b.truncation_ && a.ids_ == b.ids_ && a.tables_ == b.tables_;
}

std::string Violation::describe() const {
  return "identity " + identity + " fails in dimension " + std::to_string(dim) + " at cell '" + witness + "'";
}

namespace {

// A word of generator actions with a common site composite. Words are kept
// in application order of the site maps; the presheaf applies them in
// reverse.
struct SiteWord {
  std::vector<GenOp> ops;  // site-map application order
  std::string text;        // written in composition order
};

template <typename Map>
void check_groups(const Presheaf& x, const std::map<std::pair<Map, int>, std::vector<SiteWord>>& groups,
                  std::vector<Violation>& out) {
  for (const auto& [key, words] : groups) {
    if (words.size() < 2) continue;
    const int top = key.second;  // dimension the cells start in
    const SiteWord& ref = words.front();
    for (std::size_t w = 1; w < words.size(); ++w) {
      for (CellIndex c = 0; c < x.size(top); ++c) {
        auto run = [&](const SiteWord& word) {
          CellIndex v = c;
          for (auto it = word.ops.rbegin(); it != word.ops.rend(); ++it) v = x.act(*it, v);
          return v;
        };
        if (run(ref) != run(words[w])) {
          out.push_back({ref.text + " = " + words[w].text, top, x.id(top, c)});
          break;
        }
      }
    }
  }
}

}  // namespace

std::vector<Violation> validate(const Presheaf& x) {
  std::vector<Violation> out;
  const int n = x.truncation();
  const auto& op_list = x.ops();
  if (x.flavor() == Flavor::cubical) {
    std::map<std::pair<BoxMap, int>, std::vector<SiteWord>> groups;
    for (int d = 0; d <= n; ++d) groups[{BoxMap::identity(d), d}].push_back({{}, "id"});
    for (const GenOp& a : op_list) {
      const BoxGenerator ga = box_generator_of(a);
      const BoxMap ma = to_map(ga);
      for (const GenOp& b : op_list) {
        const BoxGenerator gb = box_generator_of(b);
        if (gb.codomain() != ga.domain()) continue;
        // Site composite ga . gb: apply gb first.
        const BoxMap composite = compose(ma, to_map(gb));
        groups[{composite, ga.codomain()}].push_back({{b, a}, render(ga) + " " + render(gb)});
      }
    }
    check_groups(x, groups, out);
  } else {
    std::map<std::pair<SimplexMap, int>, std::vector<SiteWord>> groups;
    for (int d = 0; d <= n; ++d) groups[{SimplexMap::identity(d), d}].push_back({{}, "id"});
    auto name = [](const SimplexGenerator& g) { return (g.is_face ? "d" : "s") + std::to_string(g.index); };
    for (const GenOp& a : op_list) {
      const SimplexGenerator ga = simplex_generator_of(a);
      const SimplexMap ma = ga.to_map();
      for (const GenOp& b : op_list) {
        const SimplexGenerator gb = simplex_generator_of(b);
        if (gb.n != ga.domain()) continue;
        const SimplexMap composite = simplex_compose(ma, gb.to_map());
        groups[{composite, ga.n}].push_back({{b, a}, name(ga) + " " + name(gb)});
      }
    }
    check_groups(x, groups, out);
  }
  return out;
}

namespace {

template <typename Map>
std::vector<std::string> render_all(const std::vector<Map>& maps) {
  std::vector<std::string> ids;
  ids.reserve(maps.size());
  for (const auto& m : maps) ids.push_back(render(m));
  return ids;
}

template <typename Map>
CellIndex index_in(const std::vector<Map>& sorted, const Map& m) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), m);
  if (it == sorted.end() || !(*it == m)) throw ValidationError("map " + render(m) + " missing from cell list");
  return static_cast<CellIndex>(it - sorted.begin());
}

}  // namespace

Presheaf representable(Flavor flavor, int n, int truncation) {
  if (n < 0) throw RangeError("representable: negative dimension");
  std::vector<std::vector<std::string>> ids;
  if (flavor == Flavor::cubical) {
    std::vector<std::vector<BoxMap>> cells;
    for (int m = 0; m <= truncation; ++m) {
      cells.push_back(box_enumerate(m, n));
      ids.push_back(render_all(cells.back()));
    }
    return Presheaf::build(flavor, truncation, std::move(ids), [&](const GenOp& op, CellIndex c) {
      const BoxMap& f = cells[static_cast<std::size_t>(op.dim)][c];
      return index_in(cells[static_cast<std::size_t>(op.target_dim())], compose(f, to_map(box_generator_of(op))));
    });
  }
  std::vector<std::vector<SimplexMap>> cells;
  for (int m = 0; m <= truncation; ++m) {
    cells.push_back(simplex_enumerate(m, n));
    ids.push_back(render_all(cells.back()));
  }
  return Presheaf::build(flavor, truncation, std::move(ids), [&](const GenOp& op, CellIndex c) {
    const SimplexMap& f = cells[static_cast<std::size_t>(op.dim)][c];
    return index_in(cells[static_cast<std::size_t>(op.target_dim())],
                    simplex_compose(f, simplex_generator_of(op).to_map()));
  });
}

Presheaf empty_presheaf(Flavor flavor, int truncation) {
  return Presheaf::build(flavor, truncation, std::vector<std::vector<std::string>>(static_cast<std::size_t>(truncation + 1)),
                         [](const GenOp&, CellIndex) -> CellIndex { return 0; });
}

bool is_degenerate(const Presheaf& x, int dim, CellIndex c) {
  if (dim <= 0) return false;
  if (x.flavor() == Flavor::cubical) {
    for (int i = 1; i <= dim; ++i) {
      const CellIndex base = x.act(GenOp{OpKind::face, dim, i, 0}, c);
      if (x.act(GenOp{OpKind::degeneracy, dim - 1, i, 0}, base) == c) return true;
    }
    for (int i = 1; i <= dim - 1; ++i) {
      const CellIndex base = x.act(GenOp{OpKind::face, dim, i, 0}, c);
      if (x.act(GenOp{OpKind::connection, dim - 1, i, 0}, base) == c) return true;
    }
    return false;
  }
  for (int i = 0; i < dim; ++i) {
    const CellIndex base = x.act(GenOp{OpKind::face, dim, i, 0}, c);
    if (x.act(GenOp{OpKind::degeneracy, dim - 1, i, 0}, base) == c) return true;
  }
  return false;
}

std::vector<std::size_t> nondegenerate_counts(const Presheaf& x) {
  std::vector<std::size_t> counts;
  for (int d = 0; d <= x.truncation(); ++d) {
    std::size_t k = 0;
    for (CellIndex c = 0; c < x.size(d); ++c) k += is_degenerate(x, d, c) ? 0 : 1;
    counts.push_back(k);
  }
  return counts;
}

PresheafMap::PresheafMap(Trusted, PresheafPtr source, PresheafPtr target, std::vector<std::vector<CellIndex>> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {}

PresheafMap::PresheafMap(PresheafPtr source, PresheafPtr target, std::vector<std::vector<CellIndex>> components)
    : PresheafMap(Trusted{}, std::move(source), std::move(target), std::move(components)) {
  auto problems = violations();
  if (!problems.empty()) throw ValidationError("presheaf map: " + problems.front());
}

PresheafMap PresheafMap::trusted(PresheafPtr source, PresheafPtr target, std::vector<std::vector<CellIndex>> components) {
  return PresheafMap(Trusted{}, std::move(source), std::move(target), std::move(components));
}

PresheafMap PresheafMap::identity(PresheafPtr x) {
  std::vector<std::vector<CellIndex>> comps;
  for (int d = 0; d <= x->truncation(); ++d) {
    std::vector<CellIndex> c(x->size(d));
    for (CellIndex i = 0; i < c.size(); ++i) c[i] = i;
    comps.push_back(std::move(c));
  }
  return trusted(x, x, std::move(comps));
}

std::vector<std::string> PresheafMap::violations() const {
  std::vector<std::string> out;
  const Presheaf& a = *source_;
  const Presheaf& b = *target_;
  if (a.flavor() != b.flavor() || a.truncation() != b.truncation()) {
    out.push_back("source and target differ in flavor or truncation");
    return out;
  }
  if (components_.size() != static_cast<std::size_t>(a.truncation() + 1)) {
    out.push_back("wrong number of components");
    return out;
  }
  for (int d = 0; d <= a.truncation(); ++d) {
    const auto& comp = components_[static_cast<std::size_t>(d)];
    if (comp.size() != a.size(d)) {
      out.push_back("component " + std::to_string(d) + " has the wrong size");
      return out;
    }
    for (CellIndex v : comp) {
      if (v >= b.size(d)) {
        out.push_back("component " + std::to_string(d) + " points outside the target");
        return out;
      }
    }
  }
  for (const GenOp& op : a.ops()) {
    const auto& from = components_[static_cast<std::size_t>(op.dim)];
    const auto& to = components_[static_cast<std::size_t>(op.target_dim())];
    for (CellIndex c = 0; c < a.size(op.dim); ++c) {
      if (to[a.act(op, c)] != b.act(op, from[c])) {
        out.push_back("does not commute with " + render(op, a.flavor()) + " at cell '" + a.id(op.dim, c) + "'");
        break;
      }
    }
  }
  return out;
}

PresheafMap compose(const PresheafMap& g, const PresheafMap& f) {
  if (f.target_ptr() != g.source_ptr() && !(f.target() == g.source())) {
    throw CompositionError("presheaf maps are not composable");
  }
  std::vector<std::vector<CellIndex>> comps;
  for (int d = 0; d <= f.source().truncation(); ++d) {
    std::vector<CellIndex> c(f.source().size(d));
    for (CellIndex i = 0; i < c.size(); ++i) c[i] = g(d, f(d, i));
    comps.push_back(std::move(c));
  }
  return PresheafMap::trusted(f.source_ptr(), g.target_ptr(), std::move(comps));
}

bool is_mono(const PresheafMap& f) {
  for (int d = 0; d <= f.source().truncation(); ++d) {
    std::vector<bool> seen(f.target().size(d), false);
    for (CellIndex v : f.component(d)) {
      if (seen[v]) return false;
      seen[v] = true;
    }
  }
  return true;
}

bool is_epi(const PresheafMap& f) {
  for (int d = 0; d <= f.source().truncation(); ++d) {
    std::vector<bool> seen(f.target().size(d), false);
    for (CellIndex v : f.component(d)) seen[v] = true;
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) return false;
  }
  return true;
}

bool is_iso(const PresheafMap& f) { return is_mono(f) && is_epi(f); }

namespace {

void require_same_site(const Presheaf& a, const Presheaf& b, const char* what) {
  if (a.flavor() != b.flavor() || a.truncation() != b.truncation()) {
    throw PreconditionError(std::string(what) + ": flavor or truncation mismatch");
  }
}

}  // namespace

PushoutResult pushout(const PresheafMap& f, const PresheafMap& g) {
  if (f.source_ptr() != g.source_ptr() && !(f.source() == g.source())) {
    throw PreconditionError("pushout: maps do not share a source");
  }
  require_same_site(f.target(), g.target(), "pushout");
  const Presheaf& b = f.target();
  const Presheaf& c = g.target();
  const int n = b.truncation();

  // Degreewise: elements of B_d come first, then C_d.
  std::vector<std::vector<std::size_t>> label(static_cast<std::size_t>(n + 1));
  std::vector<std::vector<std::size_t>> class_rep(static_cast<std::size_t>(n + 1));
  std::vector<std::vector<std::string>> ids(static_cast<std::size_t>(n + 1));
  for (int d = 0; d <= n; ++d) {
    const std::size_t nb = b.size(d);
    UnionFind uf(nb + c.size(d));
    for (CellIndex a = 0; a < f.source().size(d); ++a) uf.unite(f(d, a), nb + g(d, a));
    std::size_t count = 0;
    auto& lab = label[static_cast<std::size_t>(d)];
    lab = uf.canonical_labels(count);
    auto& rep = class_rep[static_cast<std::size_t>(d)];
    rep.assign(count, 0);
    std::vector<bool> seen(count, false);
    for (std::size_t e = 0; e < lab.size(); ++e) {
      if (seen[lab[e]]) continue;
      seen[lab[e]] = true;
      rep[lab[e]] = e;
      ids[static_cast<std::size_t>(d)].push_back(e < nb ? "L:" + b.id(d, static_cast<CellIndex>(e))
                                                        : "R:" + c.id(d, static_cast<CellIndex>(e - nb)));
    }
  }
  auto obj = share(Presheaf::build(b.flavor(), n, std::move(ids), [&](const GenOp& op, CellIndex cls) {
    const std::size_t e = class_rep[static_cast<std::size_t>(op.dim)][cls];
    const std::size_t nb_src = b.size(op.dim);
    const std::size_t nb_dst = b.size(op.target_dim());
    const std::size_t img = e < nb_src ? b.act(op, static_cast<CellIndex>(e))
                                       : nb_dst + c.act(op, static_cast<CellIndex>(e - nb_src));
    return static_cast<CellIndex>(label[static_cast<std::size_t>(op.target_dim())][img]);
  }));
  std::vector<std::vector<CellIndex>> left, right;
  for (int d = 0; d <= n; ++d) {
    const auto& lab = label[static_cast<std::size_t>(d)];
    std::vector<CellIndex> l(b.size(d)), r(c.size(d));
    for (std::size_t e = 0; e < l.size(); ++e) l[e] = static_cast<CellIndex>(lab[e]);
    for (std::size_t e = 0; e < r.size(); ++e) r[e] = static_cast<CellIndex>(lab[b.size(d) + e]);
    left.push_back(std::move(l));
    right.push_back(std::move(r));
  }
  return {obj, PresheafMap::trusted(f.target_ptr(), obj, std::move(left)),
          PresheafMap::trusted(g.target_ptr(), obj, std::move(right))};
}

PresheafMap pushout_comparison(const PresheafMap& f, const PresheafMap& g, const PresheafMap& h, const PresheafMap& k) {
  if (!(h.source() == f.target()) || !(k.source() == g.target()) || !(h.target() == k.target())) {
    throw PreconditionError("pushout square: maps do not form a square");
  }
  if (!(compose(h, f).components() == compose(k, g).components())) {
    throw PreconditionError("pushout square: square does not commute");
  }
  const PushoutResult po = pushout(f, g);
  const Presheaf& p = *po.object;
  std::vector<std::vector<CellIndex>> comps;
  for (int d = 0; d <= p.truncation(); ++d) {
    std::vector<CellIndex> comp(p.size(d));
    for (CellIndex x = 0; x < f.target().size(d); ++x) comp[po.from_left(d, x)] = h(d, x);
    for (CellIndex x = 0; x < g.target().size(d); ++x) comp[po.from_right(d, x)] = k(d, x);
    comps.push_back(std::move(comp));
  }
  return PresheafMap::trusted(po.object, h.target_ptr(), std::move(comps));
}

bool is_pushout_square(const PresheafMap& f, const PresheafMap& g, const PresheafMap& h, const PresheafMap& k) {
  return is_iso(pushout_comparison(f, g, h, k));
}

ProductResult product(const PresheafPtr& x, const PresheafPtr& y) {
  require_same_site(*x, *y, "product");
  const int n = x->truncation();
  std::vector<std::vector<std::string>> ids;
  for (int d = 0; d <= n; ++d) {
    std::vector<std::string> level;
    level.reserve(x->size(d) * y->size(d));
    for (CellIndex a = 0; a < x->size(d); ++a) {
      for (CellIndex b = 0; b < y->size(d); ++b) level.push_back("(" + x->id(d, a) + ";" + y->id(d, b) + ")");
    }
    ids.push_back(std::move(level));
  }
  auto obj = share(Presheaf::build(x->flavor(), n, std::move(ids), [&](const GenOp& op, CellIndex pair) {
    const auto ny = static_cast<CellIndex>(y->size(op.dim));
    const CellIndex a = x->act(op, pair / ny);
    const CellIndex b = y->act(op, pair % ny);
    return static_cast<CellIndex>(a * y->size(op.target_dim()) + b);
  }));
  std::vector<std::vector<CellIndex>> first, second;
  for (int d = 0; d <= n; ++d) {
    std::vector<CellIndex> p1, p2;
    const auto ny = static_cast<CellIndex>(y->size(d));
    for (CellIndex pair = 0; pair < obj->size(d); ++pair) {
      p1.push_back(pair / ny);
      p2.push_back(pair % ny);
    }
    first.push_back(std::move(p1));
    second.push_back(std::move(p2));
  }
  return {obj, PresheafMap::trusted(obj, x, std::move(first)), PresheafMap::trusted(obj, y, std::move(second))};
}

PresheafMap pair_map(const PresheafMap& f, const PresheafMap& g, const ProductResult& prod) {
  if (!(f.source() == g.source())) throw PreconditionError("pair_map: maps do not share a source");
  std::vector<std::vector<CellIndex>> comps;
  for (int d = 0; d <= f.source().truncation(); ++d) {
    std::vector<CellIndex> comp(f.source().size(d));
    const auto ny = static_cast<CellIndex>(g.target().size(d));
    for (CellIndex c = 0; c < comp.size(); ++c) comp[c] = f(d, c) * ny + g(d, c);
    comps.push_back(std::move(comp));
  }
  return PresheafMap::trusted(f.source_ptr(), prod.object, std::move(comps));
}

PresheafMap subobject(const PresheafPtr& x, std::span<const CellRef> generators) {
  const int n = x->truncation();
  std::vector<std::vector<bool>> in(static_cast<std::size_t>(n + 1));
  for (int d = 0; d <= n; ++d) in[static_cast<std::size_t>(d)].assign(x->size(d), false);
  std::vector<CellRef> stack;
  for (const CellRef& r : generators) {
    if (r.dim < 0 || r.dim > n || r.index >= x->size(r.dim)) throw RangeError("subobject: generating cell not in presheaf");
    if (!in[static_cast<std::size_t>(r.dim)][r.index]) {
      in[static_cast<std::size_t>(r.dim)][r.index] = true;
      stack.push_back(r);
    }
  }
  // Index ops by source dimension once.
  std::vector<std::vector<GenOp>> by_dim(static_cast<std::size_t>(n + 1));
  for (const GenOp& op : x->ops()) by_dim[static_cast<std::size_t>(op.dim)].push_back(op);
  while (!stack.empty()) {
    const CellRef r = stack.back();
    stack.pop_back();
    for (const GenOp& op : by_dim[static_cast<std::size_t>(r.dim)]) {
      const CellIndex v = x->act(op, r.index);
      auto&& flag = in[static_cast<std::size_t>(op.target_dim())][v];
      if (!flag) {
        flag = true;
        stack.push_back({op.target_dim(), v});
      }
    }
  }
  std::vector<std::vector<std::string>> ids(static_cast<std::size_t>(n + 1));
  std::vector<std::vector<CellIndex>> incl(static_cast<std::size_t>(n + 1));
  std::vector<std::vector<CellIndex>> local(static_cast<std::size_t>(n + 1));
  for (int d = 0; d <= n; ++d) {
    local[static_cast<std::size_t>(d)].assign(x->size(d), 0);
    for (CellIndex c = 0; c < x->size(d); ++c) {
      if (!in[static_cast<std::size_t>(d)][c]) continue;
      local[static_cast<std::size_t>(d)][c] = static_cast<CellIndex>(incl[static_cast<std::size_t>(d)].size());
      incl[static_cast<std::size_t>(d)].push_back(c);
      ids[static_cast<std::size_t>(d)].push_back(x->id(d, c));
    }
  }
  auto sub = share(Presheaf::build(x->flavor(), n, std::move(ids), [&](const GenOp& op, CellIndex c) {
    return local[static_cast<std::size_t>(op.target_dim())][x->act(op, incl[static_cast<std::size_t>(op.dim)][c])];
  }));
  return PresheafMap::trusted(sub, x, std::move(incl));
}

PresheafMap image(const PresheafMap& f) {
  std::vector<CellRef> gens;
  for (int d = 0; d <= f.source().truncation(); ++d) {
    for (CellIndex v : f.component(d)) gens.push_back({d, v});
  }
  return subobject(f.target_ptr(), gens);
}

}  // namespace cubical
