#include "cubical/model.hpp"

#include <algorithm>

#include "cubical/error.hpp"
#include "cubical/hom.hpp"
#include "cubical/qshape.hpp"

namespace cubical {

namespace {

using Components = std::vector<std::vector<CellIndex>>;

Components empty_components(int truncation) { return Components(static_cast<std::size_t>(truncation + 1)); }

std::string render_set(const std::set<int>& s) {
  std::string out = "{";
  for (int v : s) {
    if (out.size() > 1) out += ',';
    out += std::to_string(v);
  }
  return out + "}";
}

std::set<int> range_set(int k) {
  std::set<int> s;
  for (int i = 1; i <= k; ++i) s.insert(i);
  return s;
}

std::set<int> minus(const std::set<int>& a, const std::set<int>& b) {
  std::set<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

CellIndex require_cell(const Presheaf& x, int dim, const std::string& id) {
  const auto c = x.find(dim, id);
  if (!c) throw Error("internal: no cell '" + id + "' in dimension " + std::to_string(dim));
  return *c;
}

}  // namespace

PresheafMap shape_subobject(ShapeKind kind, int n, int truncation, int index, int sign) {
  if (n < 0) throw RangeError("shape: negative dimension");
  if (n - 1 > truncation) throw RangeError("shape: truncation too small for the faces of dimension " + std::to_string(n));
  std::vector<CellRef> gens;
  PresheafPtr ambient;
  switch (kind) {
    case ShapeKind::boundary_simplex:
    case ShapeKind::horn: {
      if (kind == ShapeKind::horn && (n < 1 || index < 0 || index > n)) {
        throw RangeError("horn: index " + std::to_string(index) + " outside 0.." + std::to_string(n));
      }
      ambient = share(representable(Flavor::simplicial, n, truncation));
      for (int j = 0; j <= n && n >= 1; ++j) {
        if (kind == ShapeKind::horn && j == index) continue;
        gens.push_back({n - 1, require_cell(*ambient, n - 1, render(SimplexMap::coface(n, j)))});
      }
      break;
    }
    case ShapeKind::boundary_cube:
    case ShapeKind::open_box: {
      if (kind == ShapeKind::open_box && (n < 1 || index < 1 || index > n || sign < 0 || sign > 1)) {
        throw RangeError("open box: face (" + std::to_string(index) + "," + std::to_string(sign) + ") outside range");
      }
      ambient = share(representable(Flavor::cubical, n, truncation));
      for (int k = 1; k <= n; ++k) {
        for (int e = 0; e <= 1; ++e) {
          if (kind == ShapeKind::open_box && k == index && e == sign) continue;
          gens.push_back({n - 1, require_cell(*ambient, n - 1, render(face(n, k, e)))});
        }
      }
      break;
    }
  }
  return subobject(ambient, gens);
}

PresheafMap representable_map(const BoxMap& h, int truncation) {
  auto src = share(representable(Flavor::cubical, h.domain(), truncation));
  auto dst = share(representable(Flavor::cubical, h.codomain(), truncation));
  Components comps;
  for (int d = 0; d <= truncation; ++d) {
    comps.emplace_back();
    for (const BoxMap& f : box_enumerate(d, h.domain())) comps.back().push_back(require_cell(*dst, d, render(compose(h, f))));
  }
  return PresheafMap::trusted(src, dst, std::move(comps));
}

PresheafMap q_map(const BoxMap& h, int truncation) {
  auto src = q_object_ptr(h.domain(), truncation);
  auto dst = q_object_ptr(h.codomain(), truncation);
  Components comps;
  for (int d = 0; d <= truncation; ++d) {
    comps.emplace_back();
    for (const BoxMap& u : q_cells(d, h.domain())) {
      comps.back().push_back(require_cell(*dst, d, render(canonicalize(compose(h, u)))));
    }
  }
  return PresheafMap(src, dst, std::move(comps));
}

PresheafMap q_simplex_iso(const QPresentation& q, int n) {
  const Presheaf& src = *q.object();
  const int truncation = src.truncation();
  auto dst = q_object_ptr(n, truncation);
  Components comps;
  for (int m = 0; m <= truncation; ++m) {
    comps.emplace_back();
    for (CellIndex cls = 0; cls < src.size(m); ++cls) {
      const auto r = q.representative(m, cls);
      const SimplexMap alpha = simplex_enumerate(r.dim, n)[r.simplex];
      const BoxMap shape = canonicalize(compose(cosimplicial_box_map(alpha), r.shape));
      comps.back().push_back(require_cell(*dst, m, render(shape)));
    }
  }
  return PresheafMap(q.object(), dst, std::move(comps));
}

PresheafMap q_generator(QGeneratorKind kind, int n, int truncation, int index) {
  const PresheafMap incl = shape_subobject(kind == QGeneratorKind::boundary ? ShapeKind::boundary_simplex : ShapeKind::horn,
                                           n, truncation, index);
  const QPresentation qa(incl.source_ptr(), truncation);
  const QPresentation qd(incl.target_ptr(), truncation);
  return compose(q_simplex_iso(qd, n), apply_Q(incl, qa, qd));
}

std::vector<PresheafMap> solve_lifting(const LiftingProblem& pr, bool all) {
  if (compose(pr.p, pr.base).components() != compose(pr.over, pr.i).components()) {
    throw PreconditionError("lifting problem: square does not commute");
  }
  const Presheaf& a = pr.i.source();
  SearchOptions opt;
  opt.forced.resize(static_cast<std::size_t>(a.truncation() + 1));
  for (int d = 0; d <= a.truncation(); ++d) {
    auto& forced = opt.forced[static_cast<std::size_t>(d)];
    forced.assign(pr.i.target().size(d), std::nullopt);
    for (CellIndex c = 0; c < a.size(d); ++c) {
      auto& slot = forced[pr.i(d, c)];
      if (slot && *slot != pr.base(d, c)) return {};
      slot = pr.base(d, c);
    }
  }
  opt.allow = [&](int d, CellIndex c, CellIndex t) { return pr.p(d, t) == pr.over(d, c); };
  if (!all) opt.limit = 1;
  auto lifts = search_maps(pr.i.target_ptr(), pr.base.target_ptr(), opt);
  for (const PresheafMap& d : lifts) {
    if (compose(d, pr.i).components() != pr.base.components() || compose(pr.p, d).components() != pr.over.components()) {
      throw Error("internal: lift fails a triangle");
    }
  }
  return lifts;
}

LiftingProblem no_lift_problem(int n, int truncation) {
  auto cube = share(representable(Flavor::cubical, n, truncation));
  auto none = share(empty_presheaf(Flavor::cubical, truncation));
  PresheafMap p = q_generator(QGeneratorKind::boundary, n, truncation);
  PresheafMap i = PresheafMap::trusted(none, cube, empty_components(truncation));
  PresheafMap base = PresheafMap::trusted(none, p.source_ptr(), empty_components(truncation));
  PresheafMap over = pi(n, truncation);
  return {std::move(i), std::move(p), std::move(base), std::move(over)};
}

std::vector<CellIndex> cofibrancy_obstruction(const Presheaf& x) {
  if (x.flavor() != Flavor::cubical || x.truncation() < 2) {
    throw PreconditionError("cofibrancy obstruction needs a cubical presheaf truncated at 2 or above");
  }
  std::vector<CellIndex> out;
  for (CellIndex c = 0; c < x.size(2); ++c) {
    bool all_nondegenerate = true;
    for (int i = 1; i <= 2 && all_nondegenerate; ++i) {
      for (int e = 0; e <= 1; ++e) {
        if (is_degenerate(x, 1, x.act(GenOp{OpKind::face, 2, i, e}, c))) all_nondegenerate = false;
      }
    }
    if (all_nondegenerate) out.push_back(c);
  }
  return out;
}

std::set<int> degeneracy_square_c(int k, const std::set<int>& a, const std::set<int>& b) {
  if (a == b) return a;
  std::set<int> sym;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(sym, sym.end()));
  std::set<int> c(a);
  c.insert(b.begin(), b.end());
  for (int i = *sym.begin(); i <= k; ++i) c.insert(i);
  return c;
}

BoxMap projection(const std::set<int>& keep, const std::set<int>& drop) {
  std::vector<Coord> coords;
  int pos = 0;
  for (int j : keep) {
    ++pos;
    if (!drop.count(j)) coords.push_back(Coord::max(Support{1} << (pos - 1)));
  }
  return BoxMap(static_cast<int>(keep.size()), std::move(coords));
}

namespace {

// w with w . projection(all, drop) = f, when f ignores the coordinates in drop.
BoxMap factor_through_projection(const BoxMap& f, const std::set<int>& drop) {
  const int k = f.domain();
  std::vector<int> new_pos(static_cast<std::size_t>(k + 1), 0);
  int pos = 0;
  for (int j = 1; j <= k; ++j) {
    if (!drop.count(j)) new_pos[static_cast<std::size_t>(j)] = ++pos;
  }
  std::vector<Coord> coords;
  for (const Coord& c : f.coords()) {
    if (c.is_const()) {
      coords.push_back(c);
      continue;
    }
    Support s = 0;
    for (int j = 1; j <= k; ++j) {
      if (c.support() >> (j - 1) & 1u) s |= Support{1} << (new_pos[static_cast<std::size_t>(j)] - 1);
    }
    coords.push_back(Coord::max(s));
  }
  return BoxMap(pos, std::move(coords));
}

std::set<int> degeneracy_set(const BoxMap& f) {
  const NormalForm nf = box_normal_form(f);
  return std::set<int>(nf.degeneracies.begin(), nf.degeneracies.end());
}

struct QSquare {
  PresheafMap top, left, right, bottom;
};

QSquare q_degeneracy_square(int k, const std::set<int>& a, const std::set<int>& b) {
  const std::set<int> all = range_set(k);
  const std::set<int> c = degeneracy_square_c(k, a, b);
  const int m = k - static_cast<int>(a.size());
  const int n = k - static_cast<int>(b.size());
  return {compose(pi(m, k), representable_map(projection(all, a), k)),
          compose(pi(n, k), representable_map(projection(all, b), k)),
          q_map(projection(minus(all, a), minus(c, a)), k), q_map(projection(minus(all, b), minus(c, b)), k)};
}

// Does the square pi_m f, pi_n g factor through the degeneracy square as in
// the corollary? Returns a witness on failure, empty on success.
std::string check_factorization(const BoxMap& f, const BoxMap& g) {
  const int k = f.domain();
  const std::set<int> a = degeneracy_set(f);
  const std::set<int> b = degeneracy_set(g);
  const std::set<int> all = range_set(k);
  const BoxMap wf = factor_through_projection(f, a);
  const BoxMap wg = factor_through_projection(g, b);
  if (compose(wf, projection(all, a)) != f || compose(wg, projection(all, b)) != g) return "degeneracy split failed";
  PresheafMap qwf = q_map(wf, k);  // throws if wf does not descend
  PresheafMap qwg = q_map(wg, k);
  const QSquare sq = q_degeneracy_square(k, a, b);
  if (!is_pushout_square(sq.top, sq.left, sq.right, sq.bottom)) return "inner square is not a pushout";
  const PresheafMap outer_f = compose(pi(f.codomain(), k), representable_map(f, k));
  const PresheafMap outer_g = compose(pi(g.codomain(), k), representable_map(g, k));
  const PushoutResult po = pushout(outer_f, outer_g);
  // Induced Q^r -> P along the epimorphisms of the inner square.
  const Presheaf& qr = sq.right.target();
  Components phi;
  for (int d = 0; d <= k; ++d) {
    std::vector<CellIndex> comp(qr.size(d), static_cast<CellIndex>(-1));
    auto put = [&](CellIndex at, CellIndex v) {
      if (comp[at] != static_cast<CellIndex>(-1) && comp[at] != v) return false;
      comp[at] = v;
      return true;
    };
    for (CellIndex c = 0; c < sq.right.source().size(d); ++c) {
      if (!put(sq.right(d, c), po.from_left(d, qwf(d, c)))) return "induced map ill-defined in dimension " + std::to_string(d);
    }
    for (CellIndex c = 0; c < sq.bottom.source().size(d); ++c) {
      if (!put(sq.bottom(d, c), po.from_right(d, qwg(d, c)))) return "induced map ill-defined in dimension " + std::to_string(d);
    }
    if (std::count(comp.begin(), comp.end(), static_cast<CellIndex>(-1)) != 0) return "inner square legs not epi";
    phi.push_back(std::move(comp));
  }
  const PresheafMap induced(sq.right.target_ptr(), po.object, std::move(phi));
  if (compose(po.from_left, compose(qwf, sq.top)).components() != compose(po.from_left, outer_f).components()) {
    return "outer triangle fails";
  }
  (void)induced;
  return {};
}

std::vector<std::set<int>> subsets(int k) {
  std::vector<std::set<int>> out;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    std::set<int> s;
    for (int i = 1; i <= k; ++i) {
      if (mask >> (i - 1) & 1u) s.insert(i);
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

Report verify_degeneracy_pushouts(int k) {
  Report report;
  const std::set<int> all = range_set(k);
  for (const auto& a : subsets(k)) {
    for (const auto& b : subsets(k)) {
      const std::string tag = "k=" + std::to_string(k) + " A=" + render_set(a) + " B=" + render_set(b);
      CheckResult cube{"cube " + tag, Status::pass, {}};
      try {
        const bool ok = is_pushout_square(representable_map(projection(all, a), k), representable_map(projection(all, b), k),
                                          representable_map(projection(minus(all, a), minus(b, a)), k),
                                          representable_map(projection(minus(all, b), minus(a, b)), k));
        if (!ok) {
          cube.status = Status::fail;
          cube.witness = "comparison map is not an isomorphism";
        }
      } catch (const Error& e) {
        cube.status = Status::fail;
        cube.witness = e.what();
      }
      report.push_back(std::move(cube));

      const std::set<int> c = degeneracy_square_c(k, a, b);
      CheckResult q{"q " + tag + " C=" + render_set(c), Status::pass, {}};
      try {
        const QSquare sq = q_degeneracy_square(k, a, b);
        if (!is_pushout_square(sq.top, sq.left, sq.right, sq.bottom)) {
          q.status = Status::fail;
          q.witness = "comparison map is not an isomorphism";
        }
      } catch (const Error& e) {
        q.status = Status::fail;
        q.witness = e.what();
      }
      report.push_back(std::move(q));
    }
  }
  // Factorization through the squares, on a deterministic sample of spans.
  constexpr std::size_t kSample = 400;
  std::vector<std::pair<BoxMap, BoxMap>> spans;
  const int cod = std::min(k, 2);
  for (int m = 0; m <= cod; ++m) {
    for (int n = 0; n <= cod; ++n) {
      for (const BoxMap& f : box_enumerate(k, m)) {
        for (const BoxMap& g : box_enumerate(k, n)) spans.emplace_back(f, g);
      }
    }
  }
  const std::size_t stride = std::max<std::size_t>(1, spans.size() / kSample);
  std::size_t checked = 0;
  std::string failure;
  for (std::size_t s = 0; s < spans.size(); s += stride) {
    ++checked;
    try {
      const std::string w = check_factorization(spans[s].first, spans[s].second);
      if (!w.empty()) failure = render(spans[s].first) + " / " + render(spans[s].second) + ": " + w;
    } catch (const Error& e) {
      failure = render(spans[s].first) + " / " + render(spans[s].second) + ": " + e.what();
    }
    if (!failure.empty()) break;
  }
  CheckResult fac{"factorization k=" + std::to_string(k), Status::pass, {}};
  if (!failure.empty()) {
    fac.status = Status::fail;
    fac.witness = failure;
  } else {
    fac.witness = std::to_string(checked) + " spans";
  }
  report.push_back(std::move(fac));
  return report;
}

Report verify_ac_pushout(int n, int i, const PresheafMap& attach, int truncation) {
  Report report;
  const std::string tag = "n=" + std::to_string(n) + " i=" + std::to_string(i);
  try {
    const PresheafMap h = q_generator(QGeneratorKind::horn, n, truncation, i);
    const PushoutResult po = pushout(h, attach);
    const PresheafMap ih = apply_int(h, truncation);
    const PresheafMap ia = apply_int(attach, truncation);
    const PresheafMap il = apply_int(po.from_left, truncation);
    const PresheafMap ir = apply_int(po.from_right, truncation);

    CheckResult preserved{"integral square " + tag, Status::pass, {}};
    if (!is_pushout_square(ih, ia, il, ir)) {
      preserved.status = Status::fail;
      preserved.witness = "integral of the pushout square is not a pushout";
    }
    report.push_back(std::move(preserved));

    // Delta^n <- horn -> integral X, compared with integral Y.
    const PresheafMap horn = shape_subobject(ShapeKind::horn, n, truncation, i);
    const PresheafMap adjunct = compose(ia, unit(horn.source_ptr(), truncation));
    const QPresentation qd(horn.target_ptr(), truncation);
    const PresheafMap simplex_leg =
        compose(il, compose(apply_int(q_simplex_iso(qd, n), truncation), unit(horn.target_ptr(), truncation)));
    CheckResult comparison{"horn pushout " + tag, Status::pass, {}};
    const PresheafMap cmp = pushout_comparison(horn, adjunct, simplex_leg, ir);
    if (!is_iso(cmp)) {
      comparison.status = Status::fail;
      comparison.witness = "comparison Delta^n cup integral X -> integral Y is not an isomorphism";
    } else {
      std::size_t cells = 0;
      for (int d = 0; d <= truncation; ++d) cells += cmp.target().size(d);
      comparison.witness = std::to_string(cells) + " simplices";
    }
    report.push_back(std::move(comparison));
  } catch (const Error& e) {
    report.push_back({"ac pushout " + tag, Status::fail, e.what()});
  }
  return report;
}

}  // namespace cubical
