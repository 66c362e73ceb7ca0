#include <doctest.h>

#include <set>

#include "cubical/error.hpp"
#include "cubical/hom.hpp"
#include "cubical/qshape.hpp"
#include "cubical/union_find.hpp"

using namespace cubical;

namespace {

Coord mx(std::initializer_list<int> idx) {
  Support s = 0;
  for (int i : idx) s |= Support{1} << (i - 1);
  return Coord::max(s);
}

// The generating relation: f and g agree before some coordinate j where
// both are constant 1.
bool related(const BoxMap& f, const BoxMap& g) {
  const auto a = f.coords();
  const auto b = g.coords();
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] == Coord::one() && b[j] == Coord::one()) return true;
    if (!(a[j] == b[j])) return false;
  }
  return false;
}

// Class labels of box(m, n) under the closure of the generating relation.
std::vector<std::size_t> closure_labels(const std::vector<BoxMap>& maps, std::size_t& count) {
  UnionFind uf(maps.size());
  for (std::size_t a = 0; a < maps.size(); ++a) {
    for (std::size_t b = a + 1; b < maps.size(); ++b) {
      if (related(maps[a], maps[b])) uf.unite(a, b);
    }
  }
  return uf.canonical_labels(count);
}

}  // namespace

TEST_CASE("canonicalize examples") {
  CHECK(canonicalize(BoxMap(0, {Coord::one(), Coord::zero()})) == BoxMap(0, {Coord::one(), Coord::one()}));
  const BoxMap fixed(1, {Coord::zero(), mx({1})});
  CHECK(canonicalize(fixed) == fixed);
  CHECK(canonicalize(BoxMap(1, {mx({1}), Coord::one(), Coord::zero()})) == BoxMap(1, {mx({1}), Coord::one(), Coord::one()}));
}

TEST_CASE("canonical forms are a complete invariant of the generated relation") {
  for (int m = 0; m <= 3; ++m) {
    for (int n = 0; n <= 3; ++n) {
      const auto maps = box_enumerate(m, n);
      std::size_t classes = 0;
      const auto labels = closure_labels(maps, classes);
      CAPTURE(m);
      CAPTURE(n);
      CHECK(classes == q_cells(m, n).size());
      for (std::size_t a = 0; a < maps.size(); ++a) {
        const BoxMap ca = canonicalize(maps[a]);
        CHECK(canonicalize(ca) == ca);
        CHECK(is_canonical(ca));
        for (std::size_t b = 0; b < maps.size(); ++b) {
          CHECK((labels[a] == labels[b]) == (ca == canonicalize(maps[b])));
        }
      }
    }
  }
}

TEST_CASE("low dimensional quotient cubes") {
  CHECK(isomorphic(q_object_ptr(0, 3), share(representable(Flavor::cubical, 0, 3))));
  CHECK(isomorphic(q_object_ptr(1, 3), share(representable(Flavor::cubical, 1, 3))));
  const Presheaf q2 = q_object(2, 2);
  CHECK(q2.size(0) == 3);
  CHECK(q2.size(1) == 6);
  CHECK(box_enumerate(1, 2).size() == 8);
  CHECK(nondegenerate_counts(q2) == std::vector<std::size_t>{3, 3, 1});
  for (int n = 0; n <= 3; ++n) {
    for (int t = 0; t <= 4; ++t) CHECK(validate(q_object(n, t)).empty());
  }
}

TEST_CASE("the quotient map is natural and surjective") {
  for (int n = 0; n <= 3; ++n) {
    const PresheafMap p = pi(n, 3);
    CHECK(p.violations().empty());
    CHECK(is_epi(p));
    for (int m = 0; m <= 3; ++m) {
      for (CellIndex c = 0; c < p.source().size(m); ++c) {
        const BoxMap f = parse_box_map(p.source().id(m, c), m);
        CHECK(p.target().id(m, p(m, c)) == render(canonicalize(f)));
      }
    }
  }
}

TEST_CASE("cosimplicial generators follow the table") {
  CHECK(cosimplicial_generator({true, 2, 0}) == face(2, 2, 1));
  CHECK(cosimplicial_generator({true, 2, 1}) == face(2, 2, 0));
  CHECK(cosimplicial_generator({true, 2, 2}) == face(2, 1, 0));
  CHECK(cosimplicial_generator({false, 1, 0}) == degeneracy(2, 2));
  CHECK(cosimplicial_generator({false, 2, 0}) == degeneracy(3, 3));
  CHECK(cosimplicial_generator({false, 2, 1}) == connection(3, 2));
  CHECK(cosimplicial_generator({false, 2, 2}) == connection(3, 1));
}

TEST_CASE("two cofaces into Q^2 agree only after the quotient") {
  const BoxMap a = compose(cosimplicial_generator({true, 2, 1}), cosimplicial_generator({true, 1, 0}));
  const BoxMap b = compose(cosimplicial_generator({true, 2, 0}), cosimplicial_generator({true, 1, 0}));
  CHECK_FALSE(a == b);
  CHECK(canonicalize(a) == canonicalize(b));
  const SimplexMap d1d0 = simplex_compose(SimplexMap::coface(2, 1), SimplexMap::coface(1, 0));
  const SimplexMap d0d0 = simplex_compose(SimplexMap::coface(2, 0), SimplexMap::coface(1, 0));
  CHECK(cosimplicial_map(d1d0, 2) == cosimplicial_map(d0d0, 2));
}

TEST_CASE("Q on maps is a faithful functor and hits every map") {
  const int t = 3;
  for (int m = 0; m <= 2; ++m) {
    for (int n = 0; n <= 2; ++n) {
      const auto alphas = simplex_enumerate(m, n);
      CHECK(hom_count(q_object_ptr(m, t), q_object_ptr(n, t)) == alphas.size());
      std::set<std::vector<std::vector<CellIndex>>> seen;
      for (const auto& a : alphas) {
        const PresheafMap qa = cosimplicial_map(a, t);
        CHECK(qa.violations().empty());
        CHECK(seen.insert(qa.components()).second);
        for (int p = 0; p <= 2; ++p) {
          for (const auto& b : simplex_enumerate(n, p)) {
            CHECK(compose(cosimplicial_map(b, t), qa) == cosimplicial_map(simplex_compose(b, a), t));
          }
        }
      }
    }
  }
  CHECK(cosimplicial_map(SimplexMap::identity(2), 3) == PresheafMap::identity(q_object_ptr(2, 3)));
}

TEST_CASE("descent examples") {
  const Presheaf c1 = representable(Flavor::cubical, 1, 3);
  CHECK(descends(c1, 2, *c1.find(2, render(BoxMap(2, {mx({1, 2})})))));
  CHECK_FALSE(descends(c1, 2, *c1.find(2, render(BoxMap(2, {mx({2})})))));
  for (CellIndex c = 0; c < c1.size(1); ++c) CHECK(descends(c1, 1, c));
  for (CellIndex c = 0; c < c1.size(0); ++c) CHECK(descends(c1, 0, c));
  CHECK_THROWS_AS(descends(representable(Flavor::cubical, 1, 1), 2, 0), RangeError);
}

TEST_CASE("descent is compatibility with the relation") {
  const int t = 3;
  const std::vector<PresheafPtr> objects{share(representable(Flavor::cubical, 1, t)), share(representable(Flavor::cubical, 2, t)),
                                         q_object_ptr(2, t), q_object_ptr(3, t)};
  for (const auto& x : objects) {
    for (int n = 0; n <= t; ++n) {
      for (CellIndex c = 0; c < x->size(n); ++c) {
        bool compatible = true;
        for (int m = 0; m <= t && compatible; ++m) {
          const auto maps = box_enumerate(m, n);
          for (std::size_t a = 0; a < maps.size() && compatible; ++a) {
            for (std::size_t b = a + 1; b < maps.size() && compatible; ++b) {
              if (related(maps[a], maps[b]) && x->act(maps[a], c) != x->act(maps[b], c)) compatible = false;
            }
          }
        }
        CAPTURE(x->id(n, c));
        CHECK(descends(*x, n, c) == compatible);
      }
    }
  }
}

TEST_CASE("inner degeneracies do not descend") {
  for (int n = 2; n <= 3; ++n) {
    for (int i = 1; i <= n - 1; ++i) {
      const BoxMap s = degeneracy(n, i);
      bool witnessed = false;
      for (int m = 0; m <= 2 && !witnessed; ++m) {
        const auto maps = box_enumerate(m, n);
        for (const auto& f : maps) {
          for (const auto& g : maps) {
            if (related(f, g) && !(canonicalize(compose(s, f)) == canonicalize(compose(s, g)))) witnessed = true;
          }
        }
      }
      CAPTURE(n);
      CAPTURE(i);
      CHECK(witnessed);
    }
    // The last degeneracy does descend.
    const BoxMap last = degeneracy(n, n);
    for (const auto& f : box_enumerate(1, n)) {
      for (const auto& g : box_enumerate(1, n)) {
        if (related(f, g)) CHECK(canonicalize(compose(last, f)) == canonicalize(compose(last, g)));
      }
    }
  }
}
