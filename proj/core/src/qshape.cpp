#include "cubical/qshape.hpp"

#include <algorithm>

#include "cubical/error.hpp"

namespace cubical {

BoxMap canonicalize(const BoxMap& f) {
  std::vector<Coord> coords(f.coords().begin(), f.coords().end());
  bool seen_one = false;
  for (Coord& c : coords) {
    if (seen_one) c = Coord::one();
    if (c.kind() == Coord::Kind::one) seen_one = true;
  }
  return BoxMap(f.domain(), std::move(coords));
}

std::vector<BoxMap> q_cells(int m, int n) {
  std::vector<BoxMap> out;
  for (BoxMap& f : box_enumerate(m, n)) {
    if (is_canonical(f)) out.push_back(std::move(f));
  }
  return out;
}

namespace {

CellIndex locate(const std::vector<BoxMap>& sorted, const BoxMap& f) {
  const auto it = std::lower_bound(sorted.begin(), sorted.end(), f);
  if (it == sorted.end() || *it != f) throw Error("internal: cell " + render(f) + " missing from table");
  return static_cast<CellIndex>(it - sorted.begin());
}

}  // namespace

Presheaf q_object(int n, int truncation) {
  std::vector<std::vector<BoxMap>> cells;
  std::vector<std::vector<std::string>> ids;
  for (int m = 0; m <= truncation; ++m) {
    cells.push_back(q_cells(m, n));
    ids.emplace_back();
    for (const BoxMap& f : cells.back()) ids.back().push_back(render(f));
  }
  return Presheaf::build(Flavor::cubical, truncation, std::move(ids), [&](const GenOp& op, CellIndex c) {
    const BoxMap& rep = cells[static_cast<std::size_t>(op.dim)][c];
    const BoxMap moved = canonicalize(compose(rep, to_map(box_generator_of(op))));
    return locate(cells[static_cast<std::size_t>(op.target_dim())], moved);
  });
}

PresheafPtr q_object_ptr(int n, int truncation) { return share(q_object(n, truncation)); }

PresheafMap pi(int n, int truncation) {
  auto cube = share(representable(Flavor::cubical, n, truncation));
  auto q = q_object_ptr(n, truncation);
  std::vector<std::vector<CellIndex>> comps;
  for (int m = 0; m <= truncation; ++m) {
    const auto all = box_enumerate(m, n);
    const auto canon = q_cells(m, n);
    comps.emplace_back();
    for (const BoxMap& f : all) comps.back().push_back(locate(canon, canonicalize(f)));
  }
  return PresheafMap::trusted(cube, q, std::move(comps));
}

BoxMap cosimplicial_generator(const SimplexGenerator& g) {
  const int n = g.n;
  if (g.is_face) {
    // coface d^j : [n-1] -> [n]
    return g.index == 0 ? face(n, n, 1) : face(n, n - g.index + 1, 0);
  }
  // codegeneracy s^j : [n+1] -> [n], realised on [1]^{n+1} -> [1]^n
  const int top = n + 1;
  return g.index == 0 ? degeneracy(top, top) : connection(top, top - g.index);
}

BoxMap cosimplicial_box_map(const SimplexMap& alpha) {
  BoxMap acc = BoxMap::identity(alpha.domain());
  for (const SimplexGenerator& g : simplex_word(alpha)) acc = compose(cosimplicial_generator(g), acc);
  return acc;
}

PresheafMap cosimplicial_map(const SimplexMap& alpha, int truncation) {
  const BoxMap b = cosimplicial_box_map(alpha);
  auto src = q_object_ptr(alpha.domain(), truncation);
  auto dst = q_object_ptr(alpha.codomain(), truncation);
  std::vector<std::vector<CellIndex>> comps;
  for (int m = 0; m <= truncation; ++m) {
    const auto from = q_cells(m, alpha.domain());
    const auto to = q_cells(m, alpha.codomain());
    comps.emplace_back();
    for (const BoxMap& u : from) comps.back().push_back(locate(to, canonicalize(compose(b, u))));
  }
  return PresheafMap::trusted(src, dst, std::move(comps));
}

bool descends(const Presheaf& x, int dim, CellIndex c) {
  if (x.flavor() != Flavor::cubical) throw PreconditionError("descends needs a cubical presheaf");
  if (dim > x.truncation()) throw RangeError("dimension " + std::to_string(dim) + " exceeds truncation");
  const int n = dim;
  for (int i = 1; i < n; ++i) {
    const CellIndex y = x.act(face(n, i, 1), c);
    // (x_1..x_{i-1}, 1, ..., 1) on [1]^{n-1}
    std::vector<Coord> coords;
    for (int k = 1; k < i; ++k) coords.push_back(Coord::max(Support{1} << (k - 1)));
    for (int k = i; k <= n - 1; ++k) coords.push_back(Coord::one());
    if (x.act(BoxMap(n - 1, std::move(coords)), y) != y) return false;
  }
  return true;
}

}  // namespace cubical
