#include <doctest.h>

#include <set>

#include "cubical/error.hpp"
#include "cubical/simplex.hpp"

using namespace cubical;

TEST_CASE("monotone map counts") {
  CHECK(simplex_enumerate(1, 2).size() == 6);
  CHECK(simplex_enumerate(0, 3).size() == 4);
  CHECK(simplex_enumerate(2, 1).size() == 4);
  // Independent count: weakly increasing pairs in {0,1,2}.
  int pairs = 0;
  for (int a = 0; a <= 2; ++a)
    for (int b = a; b <= 2; ++b) ++pairs;
  CHECK(pairs == 6);
}

TEST_CASE("enumeration is complete and duplicate free") {
  for (int m = 0; m <= 3; ++m) {
    for (int n = 0; n <= 3; ++n) {
      const auto maps = simplex_enumerate(m, n);
      std::set<std::vector<int>> seen;
      for (const auto& a : maps) CHECK(seen.insert(a.images()).second);
      // Brute force over all functions [m] -> [n].
      std::size_t monotone = 0;
      std::vector<int> f(static_cast<std::size_t>(m + 1), 0);
      while (true) {
        bool ok = true;
        for (int k = 0; k < m; ++k) ok = ok && f[static_cast<std::size_t>(k)] <= f[static_cast<std::size_t>(k + 1)];
        if (ok) {
          ++monotone;
          CHECK(seen.count(f) == 1);
        }
        int k = 0;
        while (k <= m && f[static_cast<std::size_t>(k)] == n) f[static_cast<std::size_t>(k++)] = 0;
        if (k > m) break;
        ++f[static_cast<std::size_t>(k)];
      }
      CHECK(monotone == maps.size());
    }
  }
}

TEST_CASE("composition is associative and unital") {
  for (const auto& f : simplex_enumerate(1, 2)) {
    for (const auto& g : simplex_enumerate(2, 2)) {
      for (const auto& h : simplex_enumerate(2, 1)) {
        CHECK(simplex_compose(h, simplex_compose(g, f)) == simplex_compose(simplex_compose(h, g), f));
      }
      CHECK(simplex_compose(g, SimplexMap::identity(2)) == g);
    }
    CHECK(simplex_compose(SimplexMap::identity(2), f) == f);
  }
  CHECK_THROWS_AS(simplex_compose(SimplexMap::identity(1), SimplexMap::identity(2)), CompositionError);
}

TEST_CASE("ez split examples") {
  const SimplexMap bij = SimplexMap::identity(2);
  CHECK(ez_split(bij).surjection == SimplexMap::identity(2));
  CHECK(ez_split(bij).injection == bij);

  const SimplexMap inj(3, {0, 2, 3});
  CHECK(ez_split(inj).surjection == SimplexMap::identity(2));
  CHECK(ez_split(inj).injection == inj);

  const SimplexMap surj(1, {0, 0, 1});
  CHECK(ez_split(surj).surjection == surj);
  CHECK(ez_split(surj).injection == SimplexMap::identity(1));
}

TEST_CASE("ez split is the unique surjection-injection factorization") {
  for (int m = 0; m <= 3; ++m) {
    for (int n = 0; n <= 3; ++n) {
      for (const auto& a : simplex_enumerate(m, n)) {
        const auto [eta, delta] = ez_split(a);
        CHECK(eta.is_surjective());
        CHECK(delta.is_injective());
        CHECK(simplex_compose(delta, eta) == a);
        int factorizations = 0;
        for (int k = 0; k <= std::min(m, n); ++k) {
          for (const auto& e : simplex_enumerate(m, k)) {
            if (!e.is_surjective()) continue;
            for (const auto& d : simplex_enumerate(k, n)) {
              if (d.is_injective() && simplex_compose(d, e) == a) ++factorizations;
            }
          }
        }
        CHECK(factorizations == 1);
      }
    }
  }
}

TEST_CASE("generator words compose to the map") {
  for (int m = 0; m <= 3; ++m) {
    for (int n = 0; n <= 3; ++n) {
      for (const auto& a : simplex_enumerate(m, n)) {
        SimplexMap acc = SimplexMap::identity(m);
        for (const auto& g : simplex_word(a)) acc = simplex_compose(g.to_map(), acc);
        CHECK(acc == a);
      }
    }
  }
}

TEST_CASE("invalid simplex maps are rejected") {
  CHECK_THROWS_AS(SimplexMap(1, {1, 0}), RangeError);
  CHECK_THROWS_AS(SimplexMap(1, {0, 2}), RangeError);
  CHECK_THROWS_AS(SimplexMap::coface(2, 3), RangeError);
  CHECK(render(SimplexMap(2, {0, 0, 1})) == "[0,0,1]");
}
