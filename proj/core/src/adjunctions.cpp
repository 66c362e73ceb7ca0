#include "cubical/adjunctions.hpp"

#include <algorithm>
#include <map>

#include "cubical/error.hpp"
#include "cubical/hom.hpp"
#include "cubical/qshape.hpp"
#include "cubical/union_find.hpp"

namespace cubical {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

template <class T>
std::size_t position(const std::vector<T>& sorted, const T& v) {
  const auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
  if (it == sorted.end() || !(*it == v)) throw Error("internal: element missing from sorted table");
  return static_cast<std::size_t>(it - sorted.begin());
}

// Index of the block containing `flat`, given increasing block offsets.
std::size_t block_of(const std::vector<std::size_t>& offsets, std::size_t flat) {
  const auto it = std::upper_bound(offsets.begin(), offsets.end(), flat);
  return static_cast<std::size_t>(it - offsets.begin()) - 1;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

}  // namespace

EzDecomposition ez_decompose(const Presheaf& x, int dim, CellIndex c) {
  require(x.flavor() == Flavor::simplicial, "ez_decompose needs a simplicial presheaf");
  SimplexMap eta = SimplexMap::identity(dim);
  int d = dim;
  CellIndex cur = c;
  for (bool reduced = true; reduced && d > 0;) {
    reduced = false;
    for (int i = 0; i < d; ++i) {
      const CellIndex base = x.act(GenOp{OpKind::face, d, i, 0}, cur);
      if (x.act(GenOp{OpKind::degeneracy, d - 1, i, 0}, base) != cur) continue;
      eta = simplex_compose(SimplexMap::codegeneracy(d - 1, i), eta);
      cur = base;
      --d;
      reduced = true;
      break;
    }
  }
  return {d, cur, std::move(eta)};
}

// ---------------------------------------------------------------------------
// Q

QPresentation::QPresentation(PresheafPtr source, int truncation) : source_(std::move(source)), truncation_(truncation) {
  const Presheaf& x = *source_;
  require(x.flavor() == Flavor::simplicial, "Q needs a simplicial presheaf");
  const int top = x.truncation();
  for (int n = 0; n <= top; ++n) {
    for (CellIndex c = 0; c < x.size(n); ++c) {
      if (!is_degenerate(x, n, c)) gens_.push_back({n, c});
    }
  }
  const auto levels = static_cast<std::size_t>(truncation + 1);
  shapes_.resize(levels);
  offsets_.resize(levels);
  labels_.resize(levels);
  first_pair_.resize(levels);
  for (int m = 0; m <= truncation; ++m) {
    const auto mm = static_cast<std::size_t>(m);
    for (int n = 0; n <= top; ++n) shapes_[mm].push_back(q_cells(m, n));
    std::size_t total = 0;
    for (const Generator& g : gens_) {
      offsets_[mm].push_back(total);
      total += shapes_[mm][static_cast<std::size_t>(g.dim)].size();
    }
    UnionFind uf(total);
    for (std::size_t gi = 0; gi < gens_.size(); ++gi) {
      const auto [n, cell] = gens_[gi];
      for (int i = 0; i <= n && n >= 1; ++i) {
        const CellIndex f = x.act(GenOp{OpKind::face, n, i, 0}, cell);
        const EzDecomposition ez = ez_decompose(x, n - 1, f);
        const std::size_t gz = generator_of(ez.dim, ez.cell);
        const BoxMap coface = cosimplicial_generator({true, n, i});
        const BoxMap collapse = cosimplicial_box_map(ez.eta);
        for (const BoxMap& u : shapes_[mm][static_cast<std::size_t>(n - 1)]) {
          uf.unite(pair_index(m, gi, canonicalize(compose(coface, u))),
                   pair_index(m, gz, canonicalize(compose(collapse, u))));
        }
      }
    }
    std::size_t count = 0;
    labels_[mm] = uf.canonical_labels(count);
    first_pair_[mm].assign(count, kNone);
    for (std::size_t p = 0; p < total; ++p) {
      auto& first = first_pair_[mm][labels_[mm][p]];
      if (first == kNone) first = p;
    }
  }
  std::vector<std::vector<std::string>> ids(levels);
  for (int m = 0; m <= truncation; ++m) {
    for (std::size_t cls = 0; cls < first_pair_[static_cast<std::size_t>(m)].size(); ++cls) {
      const Representative r = representative(m, static_cast<CellIndex>(cls));
      ids[static_cast<std::size_t>(m)].push_back(x.id(r.dim, r.simplex) + "@" + render(r.shape));
    }
  }
  object_ = share(Presheaf::build(Flavor::cubical, truncation, std::move(ids), [&](const GenOp& op, CellIndex cls) {
    const Representative r = representative(op.dim, cls);
    const BoxMap moved = canonicalize(compose(r.shape, to_map(box_generator_of(op))));
    const std::size_t gi = generator_of(r.dim, r.simplex);
    return static_cast<CellIndex>(
        labels_[static_cast<std::size_t>(op.target_dim())][pair_index(op.target_dim(), gi, moved)]);
  }));
}

std::size_t QPresentation::generator_of(int dim, CellIndex cell) const {
  for (std::size_t g = 0; g < gens_.size(); ++g) {
    if (gens_[g].dim == dim && gens_[g].cell == cell) return g;
  }
  throw Error("internal: simplex is not a nondegenerate generator");
}

std::size_t QPresentation::pair_index(int m, std::size_t gen, const BoxMap& u) const {
  const auto mm = static_cast<std::size_t>(m);
  return offsets_[mm][gen] + position(shapes_[mm][static_cast<std::size_t>(gens_[gen].dim)], u);
}

QPresentation::Representative QPresentation::representative(int m, CellIndex cls) const {
  const auto mm = static_cast<std::size_t>(m);
  const std::size_t p = first_pair_[mm][cls];
  const std::size_t gi = block_of(offsets_[mm], p);
  const Generator& g = gens_[gi];
  return {g.dim, g.cell, shapes_[mm][static_cast<std::size_t>(g.dim)][p - offsets_[mm][gi]]};
}

CellIndex QPresentation::class_of(int n, CellIndex x, const BoxMap& u) const {
  if (u.domain() > truncation_) throw RangeError("class_of: shape dimension exceeds truncation");
  const EzDecomposition ez = ez_decompose(*source_, n, x);
  const BoxMap shape = canonicalize(compose(cosimplicial_box_map(ez.eta), u));
  const std::size_t gi = generator_of(ez.dim, ez.cell);
  return static_cast<CellIndex>(labels_[static_cast<std::size_t>(u.domain())][pair_index(u.domain(), gi, shape)]);
}

PresheafPtr apply_Q(const PresheafPtr& x, int truncation) { return QPresentation(x, truncation).object(); }

PresheafMap apply_Q(const PresheafMap& f, const QPresentation& src, const QPresentation& dst) {
  std::vector<std::vector<CellIndex>> comps;
  const Presheaf& qx = *src.object();
  for (int m = 0; m <= qx.truncation(); ++m) {
    comps.emplace_back();
    for (CellIndex cls = 0; cls < qx.size(m); ++cls) {
      const auto r = src.representative(m, cls);
      comps.back().push_back(dst.class_of(r.dim, f(r.dim, r.simplex), r.shape));
    }
  }
  return PresheafMap::trusted(src.object(), dst.object(), std::move(comps));
}

PresheafMap apply_Q(const PresheafMap& f, int truncation) {
  const QPresentation src(f.source_ptr(), truncation);
  const QPresentation dst(f.target_ptr(), truncation);
  return apply_Q(f, src, dst);
}

// ---------------------------------------------------------------------------
// integral

PresheafPtr apply_int(const PresheafPtr& xp, int truncation) {
  const Presheaf& x = *xp;
  require(x.flavor() == Flavor::cubical, "apply_int needs a cubical presheaf");
  if (x.truncation() < truncation) {
    throw RangeError("apply_int: input truncated at " + std::to_string(x.truncation()) + " but " +
                     std::to_string(truncation) + " requested");
  }
  const auto levels = static_cast<std::size_t>(truncation + 1);
  std::vector<std::vector<CellIndex>> cells(levels);
  std::vector<std::vector<std::size_t>> local(levels);
  std::vector<std::vector<std::string>> ids(levels);
  for (int n = 0; n <= truncation; ++n) {
    const auto nn = static_cast<std::size_t>(n);
    local[nn].assign(x.size(n), kNone);
    for (CellIndex c = 0; c < x.size(n); ++c) {
      if (!descends(x, n, c)) continue;
      local[nn][c] = cells[nn].size();
      cells[nn].push_back(c);
      ids[nn].push_back(x.id(n, c));
    }
  }
  return share(Presheaf::build(Flavor::simplicial, truncation, std::move(ids), [&](const GenOp& op, CellIndex s) {
    const SimplexGenerator g = simplex_generator_of(op);
    const CellIndex moved = x.act(cosimplicial_generator(g), cells[static_cast<std::size_t>(op.dim)][s]);
    const std::size_t out = local[static_cast<std::size_t>(op.target_dim())][moved];
    if (out == kNone) throw Error("internal: simplicial operator left the descending cells");
    return static_cast<CellIndex>(out);
  }));
}

PresheafMap apply_int(const PresheafMap& f, int truncation) {
  auto src = apply_int(f.source_ptr(), truncation);
  auto dst = apply_int(f.target_ptr(), truncation);
  std::vector<std::vector<CellIndex>> comps;
  for (int n = 0; n <= truncation; ++n) {
    comps.emplace_back();
    for (CellIndex s = 0; s < src->size(n); ++s) {
      const CellIndex orig = *f.source().find(n, src->id(n, s));
      const auto img = dst->find(n, f.target().id(n, f(n, orig)));
      if (!img) throw Error("internal: map does not preserve descending cells");
      comps.back().push_back(*img);
    }
  }
  return PresheafMap::trusted(src, dst, std::move(comps));
}

PresheafMap unit(const PresheafPtr& x, int truncation) {
  const QPresentation q(x, truncation);
  auto iq = apply_int(q.object(), truncation);
  std::vector<std::vector<CellIndex>> comps;
  for (int n = 0; n <= truncation; ++n) {
    comps.emplace_back();
    for (CellIndex c = 0; c < x->size(n); ++c) {
      const CellIndex cls = q.class_of(n, c, BoxMap::identity(n));
      const auto s = iq->find(n, q.object()->id(n, cls));
      if (!s) throw Error("unit: class of " + x->id(n, c) + " does not descend");
      comps.back().push_back(*s);
    }
  }
  return PresheafMap(x, iq, std::move(comps));
}

PresheafMap counit(const PresheafPtr& x, int truncation) {
  auto ix = apply_int(x, truncation);
  const QPresentation q(ix, truncation);
  std::vector<std::vector<CellIndex>> comps;
  for (int m = 0; m <= truncation; ++m) {
    comps.emplace_back();
    for (CellIndex cls = 0; cls < q.object()->size(m); ++cls) {
      const auto r = q.representative(m, cls);
      const CellIndex orig = *x->find(r.dim, ix->id(r.dim, r.simplex));
      comps.back().push_back(x->act(r.shape, orig));
    }
  }
  return PresheafMap(q.object(), x, std::move(comps));
}

PresheafMap product_comparison(const PresheafPtr& a, const PresheafPtr& b, int truncation) {
  const ProductResult ab = product(a, b);
  const QPresentation qa(a, truncation);
  const QPresentation qb(b, truncation);
  const QPresentation qab(ab.object, truncation);
  const ProductResult target = product(qa.object(), qb.object());
  return pair_map(apply_Q(ab.first, qab, qa), apply_Q(ab.second, qab, qb), target);
}

// ---------------------------------------------------------------------------
// geometric product

BoxMap box_tensor(const BoxMap& f, const BoxMap& g) {
  std::vector<Coord> coords(f.coords().begin(), f.coords().end());
  for (const Coord& c : g.coords()) {
    coords.push_back(c.is_const() ? c : Coord::max(c.support() << f.domain()));
  }
  return BoxMap(f.domain() + g.domain(), std::move(coords));
}

PresheafPtr geometric_product(const PresheafPtr& xp, const PresheafPtr& yp, int truncation) {
  const Presheaf& x = *xp;
  const Presheaf& y = *yp;
  require(x.flavor() == Flavor::cubical && y.flavor() == Flavor::cubical, "geometric product needs cubical presheaves");
  const int bound = std::min(truncation + 1, kMaxBoxDim);

  struct Level {
    int p, q;
  };
  std::vector<Level> levels;
  for (int p = 0; p <= x.truncation(); ++p) {
    for (int q = 0; q <= y.truncation() && p + q <= bound; ++q) levels.push_back({p, q});
  }
  std::map<std::pair<int, int>, std::size_t> level_index;
  for (std::size_t l = 0; l < levels.size(); ++l) level_index[{levels[l].p, levels[l].q}] = l;

  const auto mcount = static_cast<std::size_t>(truncation + 1);
  std::vector<std::vector<std::vector<BoxMap>>> shapes(mcount);  // [m][k]
  std::vector<std::vector<std::size_t>> offsets(mcount);         // [m][level]
  std::vector<std::vector<std::size_t>> labels(mcount);
  std::vector<std::vector<std::size_t>> first(mcount);

  auto node = [&](int m, std::size_t l, CellIndex a, CellIndex b, const BoxMap& u) {
    const auto mm = static_cast<std::size_t>(m);
    const auto& s = shapes[mm][static_cast<std::size_t>(levels[l].p + levels[l].q)];
    return offsets[mm][l] + (static_cast<std::size_t>(a) * y.size(levels[l].q) + b) * s.size() + position(s, u);
  };
  struct Decoded {
    std::size_t level;
    CellIndex a, b;
    BoxMap u;
  };
  auto decode = [&](int m, std::size_t flat) {
    const auto mm = static_cast<std::size_t>(m);
    const std::size_t l = block_of(offsets[mm], flat);
    const auto& s = shapes[mm][static_cast<std::size_t>(levels[l].p + levels[l].q)];
    std::size_t rest = flat - offsets[mm][l];
    const std::size_t ui = rest % s.size();
    rest /= s.size();
    const auto ny = y.size(levels[l].q);
    return Decoded{l, static_cast<CellIndex>(rest / ny), static_cast<CellIndex>(rest % ny), s[ui]};
  };

  for (int m = 0; m <= truncation; ++m) {
    const auto mm = static_cast<std::size_t>(m);
    for (int k = 0; k <= bound; ++k) shapes[mm].push_back(box_enumerate(m, k));
    std::size_t total = 0;
    for (const Level& lv : levels) {
      offsets[mm].push_back(total);
      total += x.size(lv.p) * y.size(lv.q) * shapes[mm][static_cast<std::size_t>(lv.p + lv.q)].size();
    }
    UnionFind uf(total);
    for (std::size_t l = 0; l < levels.size(); ++l) {
      const auto [p, q] = levels[l];
      for (const GenOp& op : x.ops()) {
        if (op.dim != p) continue;
        const auto it = level_index.find({op.target_dim(), q});
        if (it == level_index.end()) continue;
        const BoxMap lift = box_tensor(to_map(box_generator_of(op)), BoxMap::identity(q));
        for (CellIndex a = 0; a < x.size(p); ++a) {
          const CellIndex a2 = x.act(op, a);
          for (CellIndex b = 0; b < y.size(q); ++b) {
            for (const BoxMap& u : shapes[mm][static_cast<std::size_t>(op.target_dim() + q)]) {
              uf.unite(node(m, it->second, a2, b, u), node(m, l, a, b, compose(lift, u)));
            }
          }
        }
      }
      for (const GenOp& op : y.ops()) {
        if (op.dim != q) continue;
        const auto it = level_index.find({p, op.target_dim()});
        if (it == level_index.end()) continue;
        const BoxMap lift = box_tensor(BoxMap::identity(p), to_map(box_generator_of(op)));
        for (CellIndex b = 0; b < y.size(q); ++b) {
          const CellIndex b2 = y.act(op, b);
          for (CellIndex a = 0; a < x.size(p); ++a) {
            for (const BoxMap& u : shapes[mm][static_cast<std::size_t>(p + op.target_dim())]) {
              uf.unite(node(m, it->second, a, b2, u), node(m, l, a, b, compose(lift, u)));
            }
          }
        }
      }
    }
    std::size_t count = 0;
    labels[mm] = uf.canonical_labels(count);
    first[mm].assign(count, kNone);
    for (std::size_t f = 0; f < total; ++f) {
      if (first[mm][labels[mm][f]] == kNone) first[mm][labels[mm][f]] = f;
    }
  }

  std::vector<std::vector<std::string>> ids(mcount);
  for (int m = 0; m <= truncation; ++m) {
    for (std::size_t f : first[static_cast<std::size_t>(m)]) {
      const Decoded d = decode(m, f);
      const Level& lv = levels[d.level];
      ids[static_cast<std::size_t>(m)].push_back("(" + x.id(lv.p, d.a) + ";" + y.id(lv.q, d.b) + ")@" + render(d.u));
    }
  }
  return share(Presheaf::build(Flavor::cubical, truncation, std::move(ids), [&](const GenOp& op, CellIndex cls) {
    const Decoded d = decode(op.dim, first[static_cast<std::size_t>(op.dim)][cls]);
    const BoxMap moved = compose(d.u, to_map(box_generator_of(op)));
    return static_cast<CellIndex>(
        labels[static_cast<std::size_t>(op.target_dim())][node(op.target_dim(), d.level, d.a, d.b, moved)]);
  }));
}

// ---------------------------------------------------------------------------
// triangulation

namespace {

using Chain = std::vector<std::uint32_t>;

// Chains of k+1 weakly increasing points of [1]^p, lexicographic.
std::vector<Chain> chains(int k, int p) {
  std::vector<Chain> out;
  Chain cur;
  const std::uint32_t full = (p >= 32) ? ~0u : ((1u << p) - 1);
  auto rec = [&](auto&& self, std::uint32_t lower) -> void {
    if (static_cast<int>(cur.size()) == k + 1) {
      out.push_back(cur);
      return;
    }
    // supersets of `lower` inside `full`, increasing
    for (std::uint32_t s = 0; s <= full; ++s) {
      if ((s & lower) != lower || (s & ~full) != 0) continue;
      cur.push_back(s);
      self(self, s);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::string render_chain(const Chain& c, int p) {
  std::string s = "[";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i > 0) s += ',';
    if (p == 0) s += '*';
    for (int b = 0; b < p; ++b) s += (c[i] >> b & 1u) ? '1' : '0';
  }
  return s + "]";
}

Chain act_on_chain(const GenOp& op, const Chain& c) {
  Chain out = c;
  const auto i = static_cast<std::size_t>(op.index);
  if (op.kind == OpKind::face) {
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
  } else {
    out.insert(out.begin() + static_cast<std::ptrdiff_t>(i), c[i]);
  }
  return out;
}

Chain push_chain(const BoxMap& g, const Chain& c) {
  Chain out;
  out.reserve(c.size());
  for (std::uint32_t pt : c) out.push_back(apply_to_point(g, pt));
  return out;
}

}  // namespace

PresheafPtr cube_nerve(int n, int truncation) {
  std::vector<std::vector<Chain>> cells;
  std::vector<std::vector<std::string>> ids;
  for (int k = 0; k <= truncation; ++k) {
    cells.push_back(chains(k, n));
    ids.emplace_back();
    for (const Chain& c : cells.back()) ids.back().push_back(render_chain(c, n));
  }
  return share(Presheaf::build(Flavor::simplicial, truncation, std::move(ids), [&](const GenOp& op, CellIndex c) {
    const Chain moved = act_on_chain(op, cells[static_cast<std::size_t>(op.dim)][c]);
    return static_cast<CellIndex>(position(cells[static_cast<std::size_t>(op.target_dim())], moved));
  }));
}

PresheafPtr triangulate(const PresheafPtr& xp, int truncation) {
  const Presheaf& x = *xp;
  require(x.flavor() == Flavor::cubical, "triangulate needs a cubical presheaf");
  const int top = x.truncation();
  const auto kcount = static_cast<std::size_t>(truncation + 1);
  std::vector<std::vector<std::vector<Chain>>> ch(kcount);  // [k][p]
  std::vector<std::vector<std::size_t>> offsets(kcount);    // [k][p]
  std::vector<std::vector<std::size_t>> labels(kcount);
  std::vector<std::vector<std::size_t>> first(kcount);

  auto node = [&](int k, int p, CellIndex a, const Chain& t) {
    const auto kk = static_cast<std::size_t>(k);
    const auto& list = ch[kk][static_cast<std::size_t>(p)];
    return offsets[kk][static_cast<std::size_t>(p)] + static_cast<std::size_t>(a) * list.size() + position(list, t);
  };
  struct Decoded {
    int p;
    CellIndex a;
    const Chain* t;
  };
  auto decode = [&](int k, std::size_t flat) {
    const auto kk = static_cast<std::size_t>(k);
    const std::size_t p = block_of(offsets[kk], flat);
    const auto& list = ch[kk][p];
    const std::size_t rest = flat - offsets[kk][p];
    return Decoded{static_cast<int>(p), static_cast<CellIndex>(rest / list.size()), &list[rest % list.size()]};
  };

  for (int k = 0; k <= truncation; ++k) {
    const auto kk = static_cast<std::size_t>(k);
    std::size_t total = 0;
    for (int p = 0; p <= top; ++p) {
      ch[kk].push_back(chains(k, p));
      offsets[kk].push_back(total);
      total += x.size(p) * ch[kk].back().size();
    }
    UnionFind uf(total);
    for (const GenOp& op : x.ops()) {
      const BoxMap g = to_map(box_generator_of(op));
      for (CellIndex a = 0; a < x.size(op.dim); ++a) {
        const CellIndex a2 = x.act(op, a);
        for (const Chain& t : ch[kk][static_cast<std::size_t>(op.target_dim())]) {
          uf.unite(node(k, op.target_dim(), a2, t), node(k, op.dim, a, push_chain(g, t)));
        }
      }
    }
    std::size_t count = 0;
    labels[kk] = uf.canonical_labels(count);
    first[kk].assign(count, kNone);
    for (std::size_t f = 0; f < total; ++f) {
      if (first[kk][labels[kk][f]] == kNone) first[kk][labels[kk][f]] = f;
    }
  }

  std::vector<std::vector<std::string>> ids(kcount);
  for (int k = 0; k <= truncation; ++k) {
    for (std::size_t f : first[static_cast<std::size_t>(k)]) {
      const Decoded d = decode(k, f);
      ids[static_cast<std::size_t>(k)].push_back(x.id(d.p, d.a) + "|" + render_chain(*d.t, d.p));
    }
  }
  return share(Presheaf::build(Flavor::simplicial, truncation, std::move(ids), [&](const GenOp& op, CellIndex cls) {
    const Decoded d = decode(op.dim, first[static_cast<std::size_t>(op.dim)][cls]);
    const Chain moved = act_on_chain(op, *d.t);
    return static_cast<CellIndex>(labels[static_cast<std::size_t>(op.target_dim())][node(op.target_dim(), d.p, d.a, moved)]);
  }));
}

PresheafPtr u_functor(const PresheafPtr& xp, int truncation) {
  require(xp->flavor() == Flavor::simplicial, "U needs a simplicial presheaf");
  if (xp->truncation() < truncation) throw RangeError("u_functor: input truncation below requested truncation");
  const int top = xp->truncation();
  const auto ncount = static_cast<std::size_t>(truncation + 1);
  std::vector<PresheafPtr> nerves;
  std::vector<std::vector<PresheafMap>> homs(ncount);
  std::vector<std::map<std::vector<std::vector<CellIndex>>, CellIndex>> lookup(ncount);
  std::vector<std::vector<std::string>> ids(ncount);
  for (int n = 0; n <= truncation; ++n) {
    const auto nn = static_cast<std::size_t>(n);
    nerves.push_back(cube_nerve(n, top));
    homs[nn] = hom_set(nerves.back(), xp);
    for (std::size_t h = 0; h < homs[nn].size(); ++h) {
      lookup[nn][homs[nn][h].components()] = static_cast<CellIndex>(h);
      ids[nn].push_back("u" + std::to_string(n) + "." + std::to_string(h));
    }
  }
  return share(Presheaf::build(Flavor::cubical, truncation, std::move(ids), [&](const GenOp& op, CellIndex h) {
    const int n = op.dim;
    const int m = op.target_dim();
    const BoxMap g = to_map(box_generator_of(op));  // [1]^m -> [1]^n
    const PresheafMap& phi = homs[static_cast<std::size_t>(n)][h];
    std::vector<std::vector<CellIndex>> comps;
    for (int k = 0; k <= top; ++k) {
      const auto from = chains(k, m);
      const auto to = chains(k, n);
      comps.emplace_back();
      for (const Chain& t : from) comps.back().push_back(phi(k, static_cast<CellIndex>(position(to, push_chain(g, t)))));
    }
    const auto& table = lookup[static_cast<std::size_t>(m)];
    const auto it = table.find(comps);
    if (it == table.end()) throw Error("internal: precomposite is not a listed map");
    return it->second;
  }));
}

}  // namespace cubical
