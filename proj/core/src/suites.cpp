#include "cubical/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "cubical/adjunctions.hpp"
#include "cubical/box.hpp"
#include "cubical/error.hpp"
#include "cubical/hom.hpp"
#include "cubical/homology.hpp"
#include "cubical/identities.hpp"
#include "cubical/io.hpp"
#include "cubical/model.hpp"
#include "cubical/qshape.hpp"
#include "cubical/simplex.hpp"
#include "cubical/union_find.hpp"

namespace cubical {

namespace {

// Thrown inside a check body to stop with a witness.
struct Failure {
  std::string witness;
};

void require(bool cond, const std::string& witness) {
  if (!cond) throw Failure{witness};
}

std::string str(int v) { return std::to_string(v); }

PresheafPtr cube(int n, int truncation) { return share(representable(Flavor::cubical, n, truncation)); }
PresheafPtr simplex(int n, int truncation) { return share(representable(Flavor::simplicial, n, truncation)); }

// Inclusion between two subobjects of a common presheaf; both keep the
// ambient cell identifiers.
PresheafMap id_matching_map(const PresheafPtr& from, const PresheafPtr& to) {
  SearchOptions opt;
  opt.allow = [&](int dim, CellIndex c, CellIndex t) { return from->id(dim, c) == to->id(dim, t); };
  opt.limit = 1;
  auto maps = search_maps(from, to, opt);
  if (maps.empty()) throw PreconditionError("no identifier-preserving map");
  return maps.front();
}

// ---- boxcat -----------------------------------------------------------

std::set<BoxMap> generator_closure(int max_dim) {
  std::vector<BoxMap> gens;
  for (int n = 1; n <= max_dim; ++n) {
    for (int i = 1; i <= n; ++i) {
      gens.push_back(face(n, i, 0));
      gens.push_back(face(n, i, 1));
      gens.push_back(degeneracy(n, i));
    }
    for (int i = 1; i < n; ++i) gens.push_back(connection(n, i));
  }
  std::set<BoxMap> seen;
  std::vector<BoxMap> frontier;
  for (int n = 0; n <= max_dim; ++n) {
    seen.insert(BoxMap::identity(n));
    frontier.push_back(BoxMap::identity(n));
  }
  while (!frontier.empty()) {
    std::vector<BoxMap> next;
    for (const BoxMap& f : frontier) {
      for (const BoxMap& g : gens) {
        if (g.domain() != f.codomain()) continue;
        BoxMap h = compose(g, f);
        if (seen.insert(h).second) next.push_back(std::move(h));
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

std::string check_generator_closure(const SuiteBounds& b) {
  const auto closure = generator_closure(b.max_dim);
  std::size_t total = 0;
  for (int m = 0; m <= b.max_dim; ++m) {
    for (int n = 0; n <= b.max_dim; ++n) {
      std::vector<BoxMap> expected;
      for (const BoxMap& f : closure) {
        if (f.domain() == m && f.codomain() == n) expected.push_back(f);
      }
      const auto listed = box_enumerate(m, n);
      require(listed == expected, "box(" + str(m) + "," + str(n) + "): enumerated " + std::to_string(listed.size()) +
                                      ", closure " + std::to_string(expected.size()));
      total += listed.size();
    }
  }
  return std::to_string(total) + " maps";
}

std::string check_normal_form(const SuiteBounds& b) {
  std::size_t total = 0;
  for (int m = 0; m <= b.max_dim; ++m) {
    for (int n = 0; n <= b.max_dim; ++n) {
      std::set<NormalForm> seen;
      for (const BoxMap& f : box_enumerate(m, n)) {
        const NormalForm nf = box_normal_form(f);
        require(nf_is_valid(nf), render(f) + ": invalid normal form " + render(nf));
        require(nf_evaluate(nf) == f, render(f) + ": normal form evaluates elsewhere");
        require(seen.insert(nf).second, render(f) + ": normal form shared");
        ++total;
      }
      require(nf_enumerate(m, n).size() == seen.size(), "normal form count differs for " + str(m) + "," + str(n));
    }
  }
  return std::to_string(total) + " maps";
}

std::string check_cocubical_identities(const SuiteBounds& b) {
  const auto instances = cocubical_identities(b.max_dim + 1, IdentityReading::corrected);
  for (const auto& inst : instances) require(identity_holds(inst), inst.text);
  return std::to_string(instances.size()) + " instances";
}

// ---- qshape -----------------------------------------------------------

// Q applied to a generator word (application order), on a cell of Q^dom.
BoxMap q_word(const std::vector<SimplexGenerator>& word, BoxMap u) {
  for (const auto& g : word) u = canonicalize(compose(cosimplicial_generator(g), u));
  return u;
}

SimplexMap simplex_word_map(const std::vector<SimplexGenerator>& word, int domain) {
  SimplexMap acc = SimplexMap::identity(domain);
  for (const auto& g : word) acc = simplex_compose(g.to_map(), acc);
  return acc;
}

std::string check_cosimplicial_identities(const SuiteBounds& b) {
  const int top = b.max_dim + 1;
  struct Instance {
    std::string text;
    std::vector<SimplexGenerator> lhs, rhs;
    int domain;
  };
  std::vector<Instance> instances;
  auto d = [](int n, int i) { return SimplexGenerator{true, n, i}; };
  auto s = [](int n, int i) { return SimplexGenerator{false, n, i}; };
  for (int n = 2; n <= top; ++n) {
    for (int j = 0; j <= n; ++j) {
      for (int i = 0; i < j; ++i) {
        instances.push_back({"d" + str(j) + " d" + str(i) + " = d" + str(i) + " d" + str(j - 1) + " into [" + str(n) + "]",
                             {d(n - 1, i), d(n, j)}, {d(n - 1, j - 1), d(n, i)}, n - 2});
      }
    }
  }
  for (int n = 0; n + 2 <= top; ++n) {
    for (int j = 0; j <= n; ++j) {
      for (int i = 0; i <= j; ++i) {
        instances.push_back({"s" + str(j) + " s" + str(i) + " = s" + str(i) + " s" + str(j + 1) + " onto [" + str(n) + "]",
                             {s(n + 1, i), s(n, j)}, {s(n + 1, j + 1), s(n, i)}, n + 2});
      }
    }
  }
  for (int p = 0; p + 1 <= top; ++p) {
    for (int j = 0; j <= p; ++j) {
      for (int i = 0; i <= p + 1; ++i) {
        Instance inst{"s" + str(j) + " d" + str(i) + " on [" + str(p) + "]", {d(p + 1, i), s(p, j)}, {}, p};
        if (i < j) {
          inst.rhs = {s(p - 1, j - 1), d(p, i)};
        } else if (i > j + 1) {
          inst.rhs = {s(p - 1, j), d(p, i - 1)};
        }
        instances.push_back(std::move(inst));
      }
    }
  }
  for (const auto& inst : instances) {
    require(simplex_word_map(inst.lhs, inst.domain) == simplex_word_map(inst.rhs, inst.domain), "not an identity of Delta: " + inst.text);
    const BoxMap composite = cosimplicial_box_map(simplex_word_map(inst.lhs, inst.domain));
    for (int m = 0; m <= top; ++m) {
      for (const BoxMap& u : q_cells(m, inst.domain)) {
        const BoxMap l = q_word(inst.lhs, u);
        require(l == q_word(inst.rhs, u), inst.text + " at cell " + render(u));
        require(l == canonicalize(compose(composite, u)), inst.text + " disagrees with the word map at " + render(u));
      }
    }
  }
  return std::to_string(instances.size()) + " instances";
}

// Classes of box(m, n) under the generating relation of Q^n, by union-find.
std::size_t closure_class_count(int m, int n) {
  const auto maps = box_enumerate(m, n);
  UnionFind uf(maps.size());
  auto index = [&](const BoxMap& f) {
    return static_cast<std::size_t>(std::lower_bound(maps.begin(), maps.end(), f) - maps.begin());
  };
  // f ~ g when they agree up to some constant-1 coordinate j and are
  // arbitrary afterwards.
  for (std::size_t a = 0; a < maps.size(); ++a) {
    const auto ca = maps[a].coords();
    for (int j = 1; j <= n; ++j) {
      if (!(ca[static_cast<std::size_t>(j - 1)] == Coord::one())) continue;
      std::vector<Coord> coords(ca.begin(), ca.end());
      for (int t = j + 1; t <= n; ++t) coords[static_cast<std::size_t>(t - 1)] = Coord::one();
      if (!box_is_valid(m, n, coords)) continue;
      uf.unite(a, index(BoxMap(m, coords)));
    }
  }
  std::size_t classes = 0;
  uf.canonical_labels(classes);
  return classes;
}

std::string check_q2_census(const SuiteBounds& b) {
  const Presheaf q2 = q_object(2, std::max(2, b.max_dim));
  const auto nd = nondegenerate_counts(q2);
  require(nd.size() >= 3 && nd[0] == 3 && nd[1] == 3 && nd[2] == 1,
          "nondegenerate counts " + std::to_string(nd[0]) + "/" + std::to_string(nd[1]) + "/" + std::to_string(nd[2]));
  for (int m = 0; m <= 2; ++m) {
    require(q2.size(m) == closure_class_count(m, 2), "dimension " + str(m) + " differs from the relation closure");
  }
  require(validate(q2).empty(), "Q^2 fails validation");
  return "3 vertices, 3 edges, 1 square";
}

std::string check_full_faithful(const SuiteBounds& b) {
  const int d = b.max_dim;
  for (int m = 0; m <= d; ++m) {
    for (int n = 0; n <= d; ++n) {
      const auto simplices = simplex_enumerate(m, n);
      const std::size_t homs = hom_count(q_object_ptr(m, d), q_object_ptr(n, d));
      require(homs == simplices.size(), "|hom(Q^" + str(m) + ",Q^" + str(n) + ")| = " + std::to_string(homs) + ", expected " +
                                            std::to_string(simplices.size()));
      std::set<std::vector<std::vector<CellIndex>>> seen;
      for (const auto& alpha : simplices) {
        require(seen.insert(cosimplicial_map(alpha, d).components()).second, "Q^alpha repeats at " + render(alpha));
      }
    }
  }
  return "m, n <= " + str(d);
}

// ---- coreflection -------------------------------------------------------

std::string check_unit_iso(const SuiteBounds& b) {
  const auto objects = simplicial_instances(b.max_dim);
  for (const auto& [name, x] : objects) {
    require(is_iso(unit(x, b.max_dim)), "unit of " + name + " is not an isomorphism");
  }
  return std::to_string(objects.size()) + " objects";
}

void require_valid(const NamedObject& o) {
  const auto v = validate(*o.object);
  require(v.empty(), o.name + " invalid: " + (v.empty() ? std::string() : v.front().describe()));
}

std::string check_counit_mono(const SuiteBounds& b) {
  const auto objects = cubical_instances(b.max_dim, b.corrupt_q);
  for (const auto& o : objects) {
    require_valid(o);
    const PresheafMap e = counit(o.object, b.max_dim);
    require(is_mono(e), "counit of " + o.name + " is not mono");
    require(is_iso(apply_int(e, b.max_dim)), "integral of the counit of " + o.name + " is not an isomorphism");
  }
  return std::to_string(objects.size()) + " objects";
}

std::string check_int_pushouts(const SuiteBounds& b) {
  const int n = b.max_dim;
  struct Span {
    std::string name;
    PresheafMap f, g;
  };
  std::vector<Span> spans;
  spans.push_back({"two intervals glued at a point", representable_map(face(1, 1, 0), n), representable_map(face(1, 1, 1), n)});
  const PresheafMap boundary = shape_subobject(ShapeKind::boundary_cube, 2, n);
  spans.push_back({"two squares glued along the boundary", boundary, boundary});
  const PresheafMap open = shape_subobject(ShapeKind::open_box, 2, n, 1, 0);
  spans.push_back({"square and its boundary along an open box", open, id_matching_map(open.source_ptr(), boundary.source_ptr())});
  const PresheafMap horn = q_generator(QGeneratorKind::horn, 2, n, 1);
  spans.push_back({"two copies of Q^2 along the Q-horn", horn, horn});
  for (const auto& sp : spans) {
    require(is_mono(sp.f) && is_mono(sp.g), sp.name + ": legs are not mono");
    const PushoutResult po = pushout(sp.f, sp.g);
    require(is_mono(po.from_left) && is_mono(po.from_right), sp.name + ": pushout legs are not mono");
    require(is_pushout_square(apply_int(sp.f, n), apply_int(sp.g, n), apply_int(po.from_left, n), apply_int(po.from_right, n)),
            sp.name + ": integral square is not a pushout");
  }
  return std::to_string(spans.size()) + " squares";
}

std::vector<std::pair<std::string, PresheafMap>> simplicial_monos(int n) {
  std::vector<std::pair<std::string, PresheafMap>> out;
  for (int k = 1; k <= std::min(n, 3); ++k) {
    const PresheafMap bd = shape_subobject(ShapeKind::boundary_simplex, k, n);
    out.emplace_back("boundary " + str(k), bd);
    for (int i = 0; i <= k; ++i) {
      const PresheafMap h = shape_subobject(ShapeKind::horn, k, n, i);
      out.emplace_back("horn " + str(k) + "," + str(i), h);
      out.emplace_back("horn " + str(k) + "," + str(i) + " in boundary", id_matching_map(h.source_ptr(), bd.source_ptr()));
    }
  }
  const PresheafPtr d0 = simplex(0, n);
  const PresheafPtr d1 = simplex(1, n);
  out.emplace_back("empty in point", PresheafMap::trusted(share(empty_presheaf(Flavor::simplicial, n)), d0,
                                                         std::vector<std::vector<CellIndex>>(static_cast<std::size_t>(n + 1))));
  const auto vertices = hom_set(d0, d1);
  for (std::size_t v = 0; v < vertices.size(); ++v) out.emplace_back("vertex " + std::to_string(v) + " of the interval", vertices[v]);
  const ProductResult sq = product(d1, d1);
  const PresheafMap id1 = PresheafMap::identity(d1);
  out.emplace_back("diagonal of the square", pair_map(id1, id1, sq));
  return out;
}

std::string check_q_preserves_monos(const SuiteBounds& b) {
  const auto monos = simplicial_monos(b.max_dim);
  for (const auto& [name, f] : monos) {
    require(is_mono(f), name + " is not mono");
    require(is_mono(apply_Q(f, b.max_dim)), "Q of " + name + " is not mono");
  }
  return std::to_string(monos.size()) + " inclusions";
}

std::string check_product_comparison(const SuiteBounds&) {
  constexpr int n = 2;
  const PresheafPtr d1 = simplex(1, n);
  const PresheafMap c = product_comparison(d1, d1, n);
  require(is_mono(c), "comparison is not mono");
  int missed = -1;
  for (int dim = 0; dim <= n && missed < 0; ++dim) {
    std::set<CellIndex> hit(c.component(dim).begin(), c.component(dim).end());
    if (hit.size() != c.target().size(dim)) missed = dim;
  }
  require(missed >= 0, "comparison is surjective in every dimension <= 2");
  require(is_iso(product_comparison(simplex(0, n), simplex(0, n), n)), "comparison for a point is not an isomorphism");
  require(is_iso(product_comparison(d1, simplex(0, n), n)), "comparison for interval x point is not an isomorphism");
  return "not surjective in dimension " + str(missed);
}

std::string check_geometric_product(const SuiteBounds& b) {
  const int n = b.max_dim;
  for (int p = 0; p <= n; ++p) {
    for (int q = 0; p + q <= n; ++q) {
      require(isomorphic(geometric_product(cube(p, n), cube(q, n), n), cube(p + q, n)),
              "cube^" + str(p) + " (x) cube^" + str(q) + " is not cube^" + str(p + q));
    }
  }
  const PresheafPtr unit_obj = cube(0, n);
  const std::vector<NamedObject> samples{{"cube^1", cube(1, n)},
                                         {"Q^2", q_object_ptr(2, n)},
                                         {"open box 2,1,0", shape_subobject(ShapeKind::open_box, 2, n, 1, 0).source_ptr()}};
  for (const auto& [name, x] : samples) {
    require(isomorphic(geometric_product(unit_obj, x, n), x), "cube^0 (x) " + name + " differs from " + name);
    require(isomorphic(geometric_product(x, unit_obj, n), x), name + " (x) cube^0 differs from " + name);
  }
  require(!isomorphic(product(cube(1, n), cube(1, n)).object, cube(2, n)), "cartesian square of cube^1 is cube^2");
  return "total dimension <= " + str(n);
}

// ---- model --------------------------------------------------------------

std::string first_failure(const Report& r) {
  for (const auto& c : r) {
    if (c.status == Status::fail) return c.id + ": " + c.witness;
  }
  return {};
}

std::string check_degeneracy_pushouts(const SuiteBounds& b) {
  std::size_t total = 0;
  for (int k = 0; k <= b.k; ++k) {
    const Report r = verify_degeneracy_pushouts(k);
    const std::string w = first_failure(r);
    require(w.empty(), w);
    total += r.size();
  }
  return std::to_string(total) + " squares, k <= " + str(b.k);
}

std::string check_no_lift(const SuiteBounds& b) {
  const int n_top = std::min(3, b.max_dim);
  require(n_top >= 2, "max-dim below 2");
  for (int n = 2; n <= n_top; ++n) {
    const auto lifts = solve_lifting(no_lift_problem(n, b.max_dim), false);
    require(lifts.empty(), "a diagonal exists for n = " + str(n));
  }
  // Positive control: over the identity of Q^n a diagonal exists.
  const PresheafPtr q2 = q_object_ptr(2, b.max_dim);
  const PresheafMap id = PresheafMap::identity(q2);
  const PresheafMap p2 = pi(2, b.max_dim);
  const PresheafPtr empty = share(empty_presheaf(Flavor::cubical, b.max_dim));
  const auto none = std::vector<std::vector<CellIndex>>(static_cast<std::size_t>(b.max_dim + 1));
  const LiftingProblem control{PresheafMap::trusted(empty, p2.source_ptr(), none), id, PresheafMap::trusted(empty, q2, none), p2};
  require(!solve_lifting(control).empty(), "solver found no lift in the control square");
  return "n = 2.." + str(n_top);
}

std::string check_cofibrancy_obstruction(const SuiteBounds& b) {
  const int n = std::max(2, b.max_dim);
  require(!cofibrancy_obstruction(representable(Flavor::cubical, 2, n)).empty(), "cube^2 has no witness");
  for (int k = 0; k <= b.max_dim; ++k) {
    const auto w = cofibrancy_obstruction(q_object(k, n));
    require(w.empty(), "Q^" + str(k) + " has witness " + (w.empty() ? std::string() : q_object(k, n).id(2, w.front())));
  }
  std::size_t images = 0;
  for (const auto& [name, x] : simplicial_instances(n)) {
    const PresheafPtr qx = apply_Q(x, n);
    const auto w = cofibrancy_obstruction(*qx);
    require(w.empty(), "Q(" + name + ") has witness " + (w.empty() ? std::string() : qx->id(2, w.front())));
    ++images;
  }
  return "cube^2 obstructed; " + std::to_string(images) + " Q-images clear";
}

std::string check_ac_pushouts(const SuiteBounds& b) {
  const int n = b.max_dim;
  Report all;
  {
    const PresheafMap h = q_generator(QGeneratorKind::horn, 2, n, 1);
    const Report r = verify_ac_pushout(2, 1, PresheafMap::identity(h.source_ptr()), n);
    all.insert(all.end(), r.begin(), r.end());
  }
  {
    const PresheafMap h = q_generator(QGeneratorKind::horn, 2, n, 1);
    const auto maps = hom_set(h.source_ptr(), cube(0, n));
    require(maps.size() == 1, "expected a unique map to the point");
    const Report r = verify_ac_pushout(2, 1, maps.front(), n);
    all.insert(all.end(), r.begin(), r.end());
  }
  {
    const PresheafMap h = q_generator(QGeneratorKind::horn, 1, n, 0);
    const auto maps = hom_set(h.source_ptr(), cube(1, n));
    require(!maps.empty(), "no map from the point to cube^1");
    const Report r = verify_ac_pushout(1, 0, maps.front(), n);
    all.insert(all.end(), r.begin(), r.end());
  }
  const std::string w = first_failure(all);
  require(w.empty(), w);
  return std::to_string(all.size()) + " comparisons";
}

// ---- homology -----------------------------------------------------------

std::string check_acyclicity(const SuiteBounds& b) {
  const int top = std::min(3, b.max_dim);
  std::size_t count = 0;
  auto acyclic = [&](const std::string& name, const PresheafPtr& x, int n) {
    const HomologyResult h = homology(*triangulate(x, n + 1), true);
    std::string groups;
    for (const auto& g : h.groups) groups += " " + render(g);
    require(h.acyclic(), "T" + name + " has reduced homology" + groups);
    ++count;
  };
  for (int n = 0; n <= top; ++n) acyclic("Q^" + str(n), q_object_ptr(n, n), n);
  for (int n = 1; n <= top; ++n) {
    for (int i = 0; i <= n; ++i) acyclic("Q(horn " + str(n) + "," + str(i) + ")", q_generator(QGeneratorKind::horn, n, n, i).source_ptr(), n);
  }
  return std::to_string(count) + " objects acyclic";
}

std::int64_t determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  std::int64_t det = 0;
  for (std::size_t col = 0; col < n; ++col) {
    IntMatrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<std::int64_t> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != col) row.push_back(m[r][c]);
      }
      minor.push_back(std::move(row));
    }
    const std::int64_t term = m[0][col] * determinant(minor);
    det += (col % 2 == 0) ? term : -term;
  }
  return det;
}

void subsets_of_size(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> pick(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == k) {
      out.push_back(pick);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      pick[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
}

// gcd of all k x k minors (0 when every minor vanishes).
std::int64_t minor_gcd(const IntMatrix& m, std::size_t k) {
  std::vector<std::vector<std::size_t>> rows, cols;
  subsets_of_size(m.size(), k, rows);
  subsets_of_size(m.empty() ? 0 : m[0].size(), k, cols);
  std::int64_t g = 0;
  for (const auto& rs : rows) {
    for (const auto& cs : cols) {
      IntMatrix sub;
      for (std::size_t r : rs) {
        std::vector<std::int64_t> row;
        for (std::size_t c : cs) row.push_back(m[r][c]);
        sub.push_back(std::move(row));
      }
      g = std::gcd(g, determinant(sub));
    }
  }
  return g;
}

std::string check_homology_kernel(const SuiteBounds&) {
  std::mt19937 rng(20240521);
  std::uniform_int_distribution<int> entry(-6, 6);
  std::uniform_int_distribution<int> dim(1, 4);
  constexpr int kSamples = 60;
  for (int s = 0; s < kSamples; ++s) {
    const std::size_t rows = static_cast<std::size_t>(dim(rng));
    const std::size_t cols = static_cast<std::size_t>(dim(rng));
    IntMatrix m(rows, std::vector<std::int64_t>(cols));
    // Some samples are built as products to force nontrivial invariants.
    for (auto& row : m) {
      for (auto& v : row) v = entry(rng);
    }
    if (s % 3 == 0) {
      for (auto& row : m) {
        for (auto& v : row) v *= 2;
      }
    }
    const auto inv = smith_normal_form(m);
    std::ostringstream desc;
    desc << "sample " << s << " (" << rows << "x" << cols << ")";
    for (std::size_t i = 0; i < inv.size(); ++i) {
      require(inv[i] > 0, desc.str() + ": nonpositive invariant");
      if (i > 0) require(inv[i] % inv[i - 1] == 0, desc.str() + ": divisibility chain broken");
    }
    std::int64_t prod = 1;
    for (std::size_t k = 1; k <= inv.size(); ++k) {
      prod *= inv[k - 1];
      require(minor_gcd(m, k) == prod, desc.str() + ": invariant product differs from the minor gcd at k = " + std::to_string(k));
    }
    if (inv.size() < std::min(rows, cols)) require(minor_gcd(m, inv.size() + 1) == 0, desc.str() + ": rank too small");
  }
  const PresheafMap bd = shape_subobject(ShapeKind::boundary_simplex, 2, 3);
  const HomologyResult h = homology(bd.source(), false);
  const HomologyGroup z{1, {}};
  require(h.groups.size() >= 2 && h.groups[0] == z && h.groups[1] == z, "H(boundary of Delta^2) is not (Z, Z)");
  for (std::size_t i = 2; i < h.groups.size(); ++i) require(h.groups[i].is_zero(), "H(boundary of Delta^2) nonzero above 1");
  return std::to_string(kSamples) + " matrices; H(boundary of Delta^2) = (Z, Z)";
}

// ---- serialization --------------------------------------------------------

std::string check_serialization(const SuiteBounds& b) {
  std::vector<NamedObject> objects = simplicial_instances(b.max_dim);
  const auto cubical = cubical_instances(b.max_dim, b.corrupt_q);
  objects.insert(objects.end(), cubical.begin(), cubical.end());
  for (const auto& [name, x] : objects) {
    const std::string text = serialize_presheaf(*x);
    const Presheaf back = parse_presheaf(text);
    require(back == *x, name + ": parsed presheaf differs");
    require(serialize_presheaf(back) == text, name + ": bytes differ after a round trip");
  }
  std::size_t maps = 0;
  for (const auto& [name, f] : simplicial_monos(b.max_dim)) {
    const std::string text = serialize_map(f);
    const PresheafMap back = parse_map(text);
    require(back == f, name + ": parsed map differs");
    require(serialize_map(back) == text, name + ": map bytes differ after a round trip");
    ++maps;
  }
  return std::to_string(objects.size()) + " objects, " + std::to_string(maps) + " maps";
}

// ---- registry -------------------------------------------------------------

struct Check {
  const char* id;
  const char* suite;
  std::string (*body)(const SuiteBounds&);
};

const std::vector<Check>& checks() {
  static const std::vector<Check> list = [] {
    std::vector<Check> v{
        {"boxcat.cocubical-identities", "boxcat", check_cocubical_identities},
        {"boxcat.generator-closure", "boxcat", check_generator_closure},
        {"boxcat.normal-form", "boxcat", check_normal_form},
        {"coreflection.counit-mono", "coreflection", check_counit_mono},
        {"coreflection.geometric-product", "coreflection", check_geometric_product},
        {"coreflection.int-pushouts", "coreflection", check_int_pushouts},
        {"coreflection.product-comparison", "coreflection", check_product_comparison},
        {"coreflection.q-preserves-monos", "coreflection", check_q_preserves_monos},
        {"coreflection.unit-iso", "coreflection", check_unit_iso},
        {"homology.acyclicity", "homology", check_acyclicity},
        {"homology.kernel", "homology", check_homology_kernel},
        {"model.ac-pushouts", "model", check_ac_pushouts},
        {"model.cofibrancy-obstruction", "model", check_cofibrancy_obstruction},
        {"model.degeneracy-pushouts", "model", check_degeneracy_pushouts},
        {"model.no-lift", "model", check_no_lift},
        {"qshape.cosimplicial-identities", "qshape", check_cosimplicial_identities},
        {"qshape.full-faithful", "qshape", check_full_faithful},
        {"qshape.q2-census", "qshape", check_q2_census},
        {"qshape.serialization", "qshape", check_serialization},
    };
    std::sort(v.begin(), v.end(), [](const Check& a, const Check& b) { return std::string_view(a.id) < b.id; });
    return v;
  }();
  return list;
}

CheckResult execute(const Check& c, const SuiteBounds& bounds) {
  CheckResult r{c.id, Status::pass, {}};
  try {
    r.witness = c.body(bounds);
  } catch (const Failure& f) {
    r.status = Status::fail;
    r.witness = f.witness;
  } catch (const std::exception& e) {
    r.status = Status::fail;
    r.witness = std::string("error: ") + e.what();
  }
  return r;
}

}  // namespace

const std::vector<CheckInfo>& registered_checks() {
  static const std::vector<CheckInfo> info = [] {
    std::vector<CheckInfo> v;
    for (const auto& c : checks()) v.push_back({c.id, c.suite});
    return v;
  }();
  return info;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"boxcat", "qshape", "coreflection", "model", "homology", "all"};
  return names;
}

SuiteReport run_suite(std::string_view name, const SuiteBounds& bounds) {
  if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end()) {
    throw PreconditionError("unknown suite '" + std::string(name) + "'");
  }
  if (bounds.max_dim < 0 || bounds.max_dim > 6 || bounds.k < 0 || bounds.k > 4) {
    throw PreconditionError("bounds out of range (max-dim 0..6, k 0..4)");
  }
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.suite = std::string(name);
  std::vector<const Check*> selected;
  for (const auto& c : checks()) {
    if (name == "all" || name == c.suite) selected.push_back(&c);
  }
  if (bounds.parallel) {
    std::vector<std::future<CheckResult>> futures;
    for (const Check* c : selected) futures.push_back(std::async(std::launch::async, [c, &bounds] { return execute(*c, bounds); }));
    for (auto& f : futures) report.checks.push_back(f.get());
  } else {
    for (const Check* c : selected) report.checks.push_back(execute(*c, bounds));
  }
  std::sort(report.checks.begin(), report.checks.end(), [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

CheckResult run_check(std::string_view id, const SuiteBounds& bounds) {
  for (const auto& c : checks()) {
    if (id == c.id) return execute(c, bounds);
  }
  throw PreconditionError("unknown check '" + std::string(id) + "'");
}

std::vector<NamedObject> simplicial_instances(int n) {
  std::vector<NamedObject> out;
  for (int k = 0; k <= std::min(n, 3); ++k) out.push_back({"Delta^" + str(k), simplex(k, n)});
  for (int k = 2; k <= std::min(n, 3); ++k) {
    out.push_back({"boundary of Delta^" + str(k), shape_subobject(ShapeKind::boundary_simplex, k, n).source_ptr()});
  }
  for (int k = 2; k <= std::min(n, 3); ++k) {
    for (int i = 0; i <= k; ++i) {
      out.push_back({"horn " + str(k) + "," + str(i), shape_subobject(ShapeKind::horn, k, n, i).source_ptr()});
    }
  }
  out.push_back({"Delta^1 x Delta^1", product(simplex(1, n), simplex(1, n)).object});
  return out;
}

Presheaf corrupted_q2(int truncation) {
  const Presheaf q = q_object(2, truncation);
  std::vector<std::vector<std::string>> ids;
  for (int d = 0; d <= truncation; ++d) ids.push_back(q.ids(d));
  const GenOp broken{OpKind::face, 2, 1, 0};
  CellIndex victim = 0;
  while (is_degenerate(q, 2, victim)) ++victim;
  return Presheaf::build(Flavor::cubical, truncation, std::move(ids), [&](const GenOp& op, CellIndex c) {
    const CellIndex v = q.act(op, c);
    if (op == broken && c == victim) return static_cast<CellIndex>((v + 1) % q.size(1));
    return v;
  });
}

std::vector<NamedObject> cubical_instances(int n, bool corrupt_q) {
  std::vector<NamedObject> out;
  for (int k = 0; k <= std::min(n, 3); ++k) out.push_back({"cube^" + str(k), cube(k, n)});
  for (int k = 0; k <= std::min(n, 3); ++k) {
    if (k == 2 && corrupt_q) {
      out.push_back({"Q^2 (corrupted)", share(corrupted_q2(n))});
    } else {
      out.push_back({"Q^" + str(k), q_object_ptr(k, n)});
    }
  }
  if (n >= 2) {
    for (int i = 1; i <= 2; ++i) {
      for (int e = 0; e <= 1; ++e) {
        out.push_back({"open box 2," + str(i) + "," + str(e), shape_subobject(ShapeKind::open_box, 2, n, i, e).source_ptr()});
      }
    }
    out.push_back({"boundary of cube^2", shape_subobject(ShapeKind::boundary_cube, 2, n).source_ptr()});
  }
  for (const auto& [name, x] : simplicial_instances(n)) out.push_back({"Q(" + name + ")", apply_Q(x, n)});
  return out;
}

}  // namespace cubical
