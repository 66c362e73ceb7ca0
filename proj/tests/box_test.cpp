#include <doctest.h>

#include <algorithm>
#include <set>

#include "cubical/box.hpp"
#include "cubical/error.hpp"
#include "cubical/identities.hpp"
#include "cubical/simplex.hpp"

using namespace cubical;

namespace {

Coord mx(std::initializer_list<int> idx) {
  Support s = 0;
  for (int i : idx) s |= Support{1} << (i - 1);
  return Coord::max(s);
}

// Every generator whose domain and codomain lie in 0..max_dim.
std::vector<BoxMap> all_generators(int max_dim) {
  std::vector<BoxMap> gens;
  for (int n = 1; n <= max_dim; ++n) {
    for (int i = 1; i <= n; ++i) {
      gens.push_back(face(n, i, 0));
      gens.push_back(face(n, i, 1));
      gens.push_back(degeneracy(n, i));
    }
    for (int i = 1; i < n; ++i) gens.push_back(connection(n, i));
  }
  return gens;
}

// Composition closure of the generators, starting from identities.
std::set<BoxMap> generator_closure(int max_dim) {
  std::set<BoxMap> seen;
  std::vector<BoxMap> frontier;
  for (int n = 0; n <= max_dim; ++n) {
    seen.insert(BoxMap::identity(n));
    frontier.push_back(BoxMap::identity(n));
  }
  const auto gens = all_generators(max_dim);
  while (!frontier.empty()) {
    std::vector<BoxMap> next;
    for (const BoxMap& f : frontier) {
      for (const BoxMap& g : gens) {
        if (g.domain() != f.codomain()) continue;
        BoxMap h = compose(g, f);
        if (seen.insert(h).second) next.push_back(h);
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

TEST_CASE("generators match their defining formulas") {
  CHECK(face(2, 1, 1) == BoxMap(1, {Coord::one(), mx({1})}));
  CHECK(degeneracy(2, 1) == BoxMap(2, {mx({2})}));
  CHECK(connection(2, 1) == BoxMap(2, {mx({1, 2})}));
  CHECK(face(3, 2, 0) == BoxMap(2, {mx({1}), Coord::zero(), mx({2})}));
  CHECK(connection(3, 2) == BoxMap(3, {mx({1}), mx({2, 3})}));
}

TEST_CASE("generator range errors name the kind") {
  CHECK_THROWS_WITH_AS(face(2, 3, 0), doctest::Contains("face"), RangeError);
  CHECK_THROWS_WITH_AS(degeneracy(2, 0), doctest::Contains("degeneracy"), RangeError);
  CHECK_THROWS_WITH_AS(connection(2, 2), doctest::Contains("connection"), RangeError);
  CHECK_THROWS_AS(box_generator(GeneratorKind::face, 2, 1), RangeError);
  CHECK_THROWS_AS(box_generator(GeneratorKind::degeneracy, 2, 1, 0), RangeError);
  CHECK_THROWS_AS(face(2, 1, 2), RangeError);
}

TEST_CASE("composition examples") {
  const BoxMap lhs = compose(connection(2, 1), face(2, 1, 1));
  CHECK(lhs == BoxMap(1, {Coord::one()}));
  CHECK(lhs == compose(face(1, 1, 1), degeneracy(1, 1)));
  CHECK(compose(degeneracy(1, 1), face(1, 1, 0)) == BoxMap::identity(0));
  for (const BoxMap& f : box_enumerate(2, 3)) {
    CHECK(compose(BoxMap::identity(3), f) == f);
    CHECK(compose(f, BoxMap::identity(2)) == f);
  }
  CHECK_THROWS_AS(compose(face(2, 1, 0), face(2, 1, 0)), CompositionError);
}

TEST_CASE("validity follows the max-support interleaving rule") {
  const std::vector<Coord> same{mx({1}), mx({1})};
  CHECK_FALSE(box_is_valid(2, 2, same));
  const std::vector<Coord> consts{Coord::zero(), Coord::one()};
  for (int m = 0; m <= 3; ++m) CHECK(box_is_valid(m, 2, consts));
  const std::vector<Coord> swapped{mx({2}), mx({1})};
  CHECK_FALSE(box_is_valid(2, 2, swapped));
  const std::vector<Coord> out_of_range{mx({3})};
  CHECK_FALSE(box_is_valid(2, 1, out_of_range));
  const std::vector<Coord> empty_support{Coord::max(0)};
  CHECK_FALSE(box_is_valid(2, 1, empty_support));
  CHECK_THROWS_AS(BoxMap(2, {mx({1}), mx({1})}), RangeError);
}

TEST_CASE("enumeration counts") {
  CHECK(box_enumerate(1, 0).size() == 1);
  CHECK(box_enumerate(0, 1).size() == 2);
  CHECK(box_enumerate(1, 1).size() == 3);
  CHECK(box_enumerate(1, 2).size() == 8);
  CHECK(box_enumerate(0, 2).size() == 4);
}

TEST_CASE("enumeration equals generator closure for m,n <= 3") {
  const auto closure = generator_closure(3);
  for (int m = 0; m <= 3; ++m) {
    for (int n = 0; n <= 3; ++n) {
      std::vector<BoxMap> from_closure;
      for (const BoxMap& f : closure) {
        if (f.domain() == m && f.codomain() == n) from_closure.push_back(f);
      }
      const auto listed = box_enumerate(m, n);
      CAPTURE(m);
      CAPTURE(n);
      CHECK(std::is_sorted(listed.begin(), listed.end()));
      CHECK(std::adjacent_find(listed.begin(), listed.end()) == listed.end());
      CHECK(listed == from_closure);
    }
  }
}

TEST_CASE("enumeration order is lexicographic on the coordinate encoding") {
  const auto maps = box_enumerate(2, 1);
  std::vector<std::string> rendered;
  for (const auto& f : maps) rendered.push_back(render(f));
  CHECK(rendered == std::vector<std::string>{"(0)", "(1)", "(max{1})", "(max{1,2})", "(max{2})"});
}

TEST_CASE("composition never leaves the box category") {
  for (int k = 0; k <= 3; ++k) {
    for (int m = 0; m <= 3; ++m) {
      for (int n = 0; n <= 2; ++n) {
        for (const BoxMap& f : box_enumerate(k, m)) {
          for (const BoxMap& g : box_enumerate(m, n)) {
            const BoxMap h = compose(g, f);
            CHECK(box_is_valid(h.domain(), h.codomain(), h.coords()));
            // Pointwise semantics on every vertex.
            for (std::uint32_t p = 0; p < (1u << k); ++p) {
              CHECK(apply_to_point(h, p) == apply_to_point(g, apply_to_point(f, p)));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("co-cubical identities, corrected reading, hold for n <= 4") {
  const auto instances = cocubical_identities(4, IdentityReading::corrected);
  CHECK(instances.size() > 100);
  for (const auto& inst : instances) {
    CAPTURE(inst.text);
    CHECK(identity_holds(inst));
  }
}

TEST_CASE("mis-indexed reading fails exactly on the two mis-indexed connection/face cases") {
  std::set<std::string> failing_families;
  for (const auto& inst : cocubical_identities(4, IdentityReading::misindexed)) {
    if (!identity_holds(inst)) failing_families.insert(inst.family);
  }
  CHECK(failing_families == std::set<std::string>{"g_j d_{i,1} (j=i-1,i)", "g_j d_{i,e} (j>i)"});
  // Within the first family only j = i - 1 breaks.
  for (const auto& inst : cocubical_identities(4, IdentityReading::misindexed)) {
    if (inst.family != "g_j d_{i,1} (j=i-1,i)") continue;
    const int j = inst.lhs[0].index;
    const int i = inst.lhs[1].index;
    CHECK(identity_holds(inst) == (j == i));
  }
}

TEST_CASE("normal form examples") {
  const NormalForm g1 = box_normal_form(connection(2, 1));
  CHECK(g1.faces.empty());
  CHECK(g1.connections == std::vector<int>{1});
  CHECK(g1.degeneracies.empty());

  const BoxMap gg = compose(connection(3, 2), connection(4, 1));
  CHECK(gg == compose(connection(3, 1), connection(4, 3)));
  const NormalForm nf = box_normal_form(gg);
  CHECK(nf.connections == std::vector<int>{1, 3});
  CHECK(nf.faces.empty());
  CHECK(nf.degeneracies.empty());

  const NormalForm c1 = box_normal_form(BoxMap(1, {Coord::one()}));
  CHECK(c1.faces == std::vector<FaceStep>{{1, 1}});
  CHECK(c1.connections.empty());
  CHECK(c1.degeneracies == std::vector<int>{1});
  CHECK(render(c1) == "d1^1 . s1");
}

TEST_CASE("normal forms are a bijection onto valid index data for m,n <= 3") {
  for (int m = 0; m <= 3; ++m) {
    for (int n = 0; n <= 3; ++n) {
      const auto maps = box_enumerate(m, n);
      const auto forms = nf_enumerate(m, n);
      CAPTURE(m);
      CAPTURE(n);
      CHECK(forms.size() == maps.size());
      std::set<NormalForm> seen;
      for (const BoxMap& f : maps) {
        const NormalForm nf = box_normal_form(f);
        CHECK(nf_is_valid(nf));
        CHECK(nf_evaluate(nf) == f);
        CHECK(seen.insert(nf).second);
      }
      for (const NormalForm& nf : forms) CHECK(seen.count(nf) == 1);
    }
  }
}

TEST_CASE("a single constant map has exactly one factorization of normal shape") {
  // Exhaust all words faces . connections . degeneracies from [1]^1 to [1]^1
  // with the prescribed orderings; only one composes to (1).
  int hits = 0;
  for (const NormalForm& nf : nf_enumerate(1, 1)) {
    if (nf_evaluate(nf) == BoxMap(1, {Coord::one()})) ++hits;
  }
  CHECK(hits == 1);
}

TEST_CASE("invalid normal forms are rejected") {
  NormalForm nf;
  nf.domain = 2;
  nf.codomain = 0;
  nf.degeneracies = {1, 2};  // must be decreasing
  CHECK_FALSE(nf_is_valid(nf));
  CHECK_THROWS_AS(nf_evaluate(nf), RangeError);
  nf.degeneracies = {2, 1};
  CHECK(nf_is_valid(nf));
  nf.codomain = 1;
  CHECK_FALSE(nf_is_valid(nf));
}

TEST_CASE("render and parse") {
  const BoxMap f(2, {Coord::one(), mx({1, 2}), Coord::zero()});
  CHECK(render(f) == "(1, max{1,2}, 0)");
  CHECK(parse_box_map("(1, max{1,2}, 0)", 2) == f);
  CHECK(parse_box_map("()", 3) == BoxMap(3, {}));
  CHECK_THROWS_AS(parse_box_map("(max{2}, max{1})", 2), ParseError);
  CHECK_THROWS_AS(parse_box_map("(2)", 2), ParseError);
  CHECK_THROWS_AS(parse_box_map("(0", 2), ParseError);
  CHECK(render(BoxGenerator{GeneratorKind::face, 2, 1, 1}) == "d1^1");
  CHECK(parse_box_generator("g1", 3) == BoxGenerator{GeneratorKind::connection, 3, 1, 0});
  CHECK_THROWS_AS(parse_box_generator("g3", 3), ParseError);
  for (int m = 0; m <= 3; ++m) {
    for (const BoxMap& g : box_enumerate(m, 2)) CHECK(parse_box_map(render(g), m) == g);
  }
}
