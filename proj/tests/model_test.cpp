#include <doctest.h>

#include <algorithm>

#include "cubical/error.hpp"
#include "cubical/hom.hpp"
#include "cubical/model.hpp"
#include "cubical/qshape.hpp"

using namespace cubical;

namespace {

PresheafPtr cube(int n, int t) { return share(representable(Flavor::cubical, n, t)); }

PresheafMap from_empty(const PresheafPtr& to) {
  const int t = to->truncation();
  return PresheafMap(share(empty_presheaf(to->flavor(), t)), to, std::vector<std::vector<CellIndex>>(static_cast<std::size_t>(t + 1)));
}

PresheafMap to_point(const PresheafPtr& from) {
  const auto maps = hom_set(from, cube(0, from->truncation()));
  REQUIRE(maps.size() == 1);
  return maps.front();
}

// Every diagonal, by filtering the full hom-set.
std::vector<PresheafMap> brute_force_lifts(const LiftingProblem& pr) {
  std::vector<PresheafMap> out;
  for (const auto& d : hom_set(pr.i.target_ptr(), pr.p.source_ptr())) {
    if (compose(d, pr.i) == pr.base && compose(pr.p, d) == pr.over) out.push_back(d);
  }
  return out;
}

std::vector<std::vector<std::vector<CellIndex>>> sorted_components(const std::vector<PresheafMap>& maps) {
  std::vector<std::vector<std::vector<CellIndex>>> out;
  for (const auto& m : maps) out.push_back(m.components());
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t nondegenerate_in(const Presheaf& x, int dim) { return nondegenerate_counts(x)[static_cast<std::size_t>(dim)]; }

}  // namespace

TEST_CASE("shape subobjects") {
  const PresheafMap box = shape_subobject(ShapeKind::open_box, 2, 2, 1, 0);
  CHECK(is_mono(box));
  CHECK(box.source().size(0) == 4);
  CHECK(nondegenerate_in(box.source(), 1) == 3);
  CHECK(nondegenerate_in(box.source(), 2) == 0);

  const PresheafMap bd = shape_subobject(ShapeKind::boundary_simplex, 2, 2);
  CHECK(nondegenerate_counts(bd.source()) == std::vector<std::size_t>{3, 3, 0});
  const PresheafMap horn = shape_subobject(ShapeKind::horn, 2, 2, 1);
  CHECK(nondegenerate_counts(horn.source()) == std::vector<std::size_t>{3, 2, 0});
  for (int d = 0; d <= 2; ++d) {
    for (CellIndex c = 0; c < horn.source().size(d); ++c) CHECK(bd.source().find(d, horn.source().id(d, c)).has_value());
  }
  // The missing face of the horn is the one opposite vertex 1.
  CHECK_FALSE(horn.source().find(1, render(SimplexMap(2, {0, 2}))).has_value());

  const PresheafMap bc = shape_subobject(ShapeKind::boundary_cube, 2, 2);
  CHECK(nondegenerate_counts(bc.source()) == std::vector<std::size_t>{4, 4, 0});

  CHECK_THROWS_AS(shape_subobject(ShapeKind::horn, 2, 2, 3), RangeError);
  CHECK_THROWS_AS(shape_subobject(ShapeKind::open_box, 2, 2, 0, 0), RangeError);
  CHECK_THROWS_AS(shape_subobject(ShapeKind::open_box, 2, 2, 1, 2), RangeError);
}

TEST_CASE("Q-images of the generating inclusions") {
  for (int n = 0; n <= 3; ++n) {
    const PresheafMap b = q_generator(QGeneratorKind::boundary, n, 3);
    CHECK(is_mono(b));
    CHECK(isomorphic(b.target_ptr(), q_object_ptr(n, 3)));
    for (int i = 0; i <= n && n >= 1; ++i) CHECK(is_mono(q_generator(QGeneratorKind::horn, n, 3, i)));
  }
  const PresheafMap b0 = q_generator(QGeneratorKind::boundary, 0, 3);
  CHECK(b0.source().empty());
  CHECK(b0.target().total_cells() == 4);

  const PresheafMap h10 = q_generator(QGeneratorKind::horn, 1, 3, 0);
  CHECK(isomorphic(h10.source_ptr(), cube(0, 3)));
  CHECK(isomorphic(h10.target_ptr(), cube(1, 3)));
  // The vertex hit is an endpoint of the interval.
  const PresheafMap endpoint = representable_map(face(1, 1, 0), 3);
  const PresheafMap other = representable_map(face(1, 1, 1), 3);
  const PresheafMap iso = *find_iso(h10.target_ptr(), cube(1, 3));
  const PresheafMap moved = compose(iso, h10);
  CHECK((moved.components() == endpoint.components() || moved.components() == other.components()));
}

TEST_CASE("lifting against a map to the point") {
  const PresheafPtr pt = cube(0, 2);
  const PresheafMap i = from_empty(pt);
  const PresheafPtr empty = share(empty_presheaf(Flavor::cubical, 2));
  const LiftingProblem none{i, to_point(empty), from_empty(empty), PresheafMap::identity(pt)};
  CHECK(solve_lifting(none).empty());
  const PresheafPtr c1 = cube(1, 2);
  const LiftingProblem some{i, to_point(c1), from_empty(c1), PresheafMap::identity(pt)};
  CHECK(solve_lifting(some).size() == 1);
  CHECK(solve_lifting(some, true).size() == 2);
}

TEST_CASE("no diagonal from the cube into Q of the boundary") {
  for (int n = 2; n <= 3; ++n) {
    const LiftingProblem pr = no_lift_problem(n, 3);
    CHECK(solve_lifting(pr, true).empty());
  }
  CHECK(brute_force_lifts(no_lift_problem(2, 2)).empty());
}

TEST_CASE("horn lifting into Q^2 over the point") {
  const int t = 2;
  const PresheafMap h = q_generator(QGeneratorKind::horn, 2, t, 1);
  const LiftingProblem pr{h, to_point(h.target_ptr()), h, to_point(h.target_ptr())};
  const auto lifts = solve_lifting(pr, true);
  const auto oracle = brute_force_lifts(pr);
  CHECK_FALSE(oracle.empty());
  CHECK(sorted_components(lifts) == sorted_components(oracle));
  for (const auto& d : lifts) {
    CHECK(compose(d, pr.i) == pr.base);
    CHECK(compose(pr.p, d) == pr.over);
  }
}

TEST_CASE("solver agrees with exhaustive search on small problems") {
  const int t = 1;
  const std::vector<PresheafMap> is{representable_map(face(1, 1, 0), t), from_empty(cube(1, t)),
                                    shape_subobject(ShapeKind::boundary_cube, 1, t)};
  const std::vector<PresheafPtr> xs{cube(1, t), q_object_ptr(2, t), shape_subobject(ShapeKind::open_box, 2, t, 1, 0).source_ptr()};
  for (const auto& i : is) {
    for (const auto& x : xs) {
      REQUIRE(x->total_cells() <= 25);
      const PresheafMap p = to_point(x);
      for (const auto& base : hom_set(i.source_ptr(), x)) {
        const LiftingProblem pr{i, p, base, to_point(i.target_ptr())};
        CHECK(sorted_components(solve_lifting(pr, true)) == sorted_components(brute_force_lifts(pr)));
        CHECK(solve_lifting(pr, false).size() == std::min<std::size_t>(1, brute_force_lifts(pr).size()));
      }
    }
  }
}

TEST_CASE("a non-commuting square is rejected") {
  const int t = 1;
  const PresheafMap i = representable_map(face(1, 1, 0), t);
  const PresheafMap p = PresheafMap::identity(cube(1, t));
  const PresheafMap base = representable_map(face(1, 1, 1), t);
  const LiftingProblem pr{i, p, base, PresheafMap::identity(cube(1, t))};
  CHECK_THROWS_AS(solve_lifting(pr), PreconditionError);
}

TEST_CASE("cofibrancy obstruction") {
  const Presheaf c2 = representable(Flavor::cubical, 2, 2);
  const auto w = cofibrancy_obstruction(c2);
  REQUIRE(w.size() == 1);
  CHECK(c2.id(2, w[0]) == render(BoxMap::identity(2)));
  CHECK(cofibrancy_obstruction(q_object(2, 2)).empty());
  CHECK(cofibrancy_obstruction(representable(Flavor::cubical, 1, 2)).empty());
}

TEST_CASE("the set C of the degeneracy square") {
  CHECK(degeneracy_square_c(3, {1}, {2}) == std::set<int>{1, 2, 3});
  CHECK(degeneracy_square_c(2, {1}, {1}) == std::set<int>{1});
  CHECK(degeneracy_square_c(3, {}, {3}) == std::set<int>{3});
  CHECK(degeneracy_square_c(4, {2}, {2, 4}) == std::set<int>{2, 4});
  CHECK(projection({1, 2, 3}, {2}) == BoxMap(3, {Coord::max(1), Coord::max(4)}));
}

TEST_CASE("degeneracy squares by direct pushout computation") {
  // Cube square with A = {1}, B = {2}: the pushout is a point.
  const std::set<int> all{1, 2};
  const PresheafMap f = representable_map(projection(all, {1}), 2);
  const PresheafMap g = representable_map(projection(all, {2}), 2);
  CHECK(isomorphic(pushout(f, g).object, cube(0, 2)));

  // Q square for k = 3, A = {1}, B = {2}: again a point, so r = 0.
  const std::set<int> all3{1, 2, 3};
  const PresheafMap qa = compose(pi(2, 3), representable_map(projection(all3, {1}), 3));
  const PresheafMap qb = compose(pi(2, 3), representable_map(projection(all3, {2}), 3));
  CHECK(isomorphic(pushout(qa, qb).object, q_object_ptr(0, 3)));

  // A = B: the pushout is the common target.
  const PresheafMap qs = compose(pi(1, 2), representable_map(projection(all, {1}), 2));
  CHECK(isomorphic(pushout(qs, qs).object, q_object_ptr(1, 2)));
}

TEST_CASE("degeneracy pushout verifier passes exhaustively for k <= 2") {
  for (int k = 0; k <= 2; ++k) {
    const Report r = verify_degeneracy_pushouts(k);
    CHECK(r.size() == (std::size_t{1} << (2 * k)) * 2 + 1);
    for (const auto& c : r) {
      CAPTURE(c.id);
      CAPTURE(c.witness);
      CHECK(c.status == Status::pass);
    }
  }
}

TEST_CASE("q_map rejects non-descending maps") {
  CHECK_THROWS_AS(q_map(degeneracy(2, 1), 2), ValidationError);
  CHECK(q_map(degeneracy(2, 2), 2).violations().empty());
}

TEST_CASE("integral of pushouts along Q-horns") {
  const int t = 3;
  const PresheafMap h21 = q_generator(QGeneratorKind::horn, 2, t, 1);
  const PresheafMap h10 = q_generator(QGeneratorKind::horn, 1, t, 0);
  std::vector<Report> reports;
  reports.push_back(verify_ac_pushout(2, 1, PresheafMap::identity(h21.source_ptr()), t));
  reports.push_back(verify_ac_pushout(2, 1, to_point(h21.source_ptr()), t));
  reports.push_back(verify_ac_pushout(1, 0, hom_set(h10.source_ptr(), cube(1, t)).front(), t));
  for (const auto& r : reports) {
    CHECK(r.size() == 2);
    for (const auto& c : r) {
      CAPTURE(c.id);
      CAPTURE(c.witness);
      CHECK(c.status == Status::pass);
    }
  }
  // Along the identity the pushout is Q^2 and its integral is Delta^2.
  const PushoutResult po = pushout(h21, PresheafMap::identity(h21.source_ptr()));
  CHECK(isomorphic(apply_int(po.object, t), share(representable(Flavor::simplicial, 2, t))));
}
