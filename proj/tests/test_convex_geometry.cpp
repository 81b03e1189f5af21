#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "sharplab/sharplab.hpp"

using namespace sharplab;

namespace {
const double kSqrt2 = std::sqrt(2.0);

ConvexBody unit_ball(int m) { return ConvexBody::lp_ball(LpExponent::finite(2.0), m, 1.0); }
ConvexBody cube(int m) { return ConvexBody::lp_ball(LpExponent::inf(), m, 1.0); }
ConvexBody cross(int m) { return ConvexBody::lp_ball(LpExponent::finite(1.0), m, 1.0); }
}  // namespace

TEST_CASE("lp exponent conjugation and validation") {
  CHECK(LpExponent::finite(1.0).conjugate().is_inf());
  CHECK(LpExponent::inf().conjugate().value() == 1.0);
  CHECK(LpExponent::finite(2.0).conjugate().value() == doctest::Approx(2.0));
  CHECK(LpExponent::finite(1.5).conjugate().value() == doctest::Approx(3.0));
  CHECK(LpExponent::finite(3.0).conjugate().value() == doctest::Approx(1.5));
  CHECK(LpExponent::inf().inverse() == 0.0);
  CHECK(LpExponent::finite(4.0).inverse() == doctest::Approx(0.25));
  CHECK_THROWS_AS(LpExponent::finite(0.5), GeometryError);
  CHECK_THROWS_AS(LpExponent::finite(std::numeric_limits<double>::infinity()), GeometryError);
  CHECK_THROWS_AS(LpExponent::inf().value(), GeometryError);
}

TEST_CASE("lp norms") {
  const Vec x = {3.0, -4.0};
  CHECK(lp_norm(x, LpExponent::finite(1.0)) == doctest::Approx(7.0));
  CHECK(lp_norm(x, LpExponent::finite(2.0)) == doctest::Approx(5.0));
  CHECK(lp_norm(x, LpExponent::inf()) == doctest::Approx(4.0));
  CHECK(lp_norm({0.0, 0.0}, LpExponent::finite(1.5)) == 0.0);
  CHECK(lp_norm({1e-300, 1e-300}, LpExponent::finite(3.0)) > 0.0);
}

TEST_CASE("body construction validation") {
  CHECK_THROWS_AS(ConvexBody::lp_ball(LpExponent::finite(2.0), 0), GeometryError);
  CHECK_THROWS_AS(ConvexBody::lp_ball(LpExponent::finite(2.0), 2, 0.0), GeometryError);
  CHECK_THROWS_AS(ConvexBody::lp_ball(LpExponent::finite(2.0), 2, -1.0), GeometryError);
  CHECK_THROWS_AS(ConvexBody::hrep({}), GeometryError);
  CHECK_THROWS_AS(ConvexBody::hrep({{1.0, 0.0}}), GeometryError);               // unbounded slab
  CHECK_THROWS_AS(ConvexBody::hrep({{1.0, 0.0}, {2.0, 0.0}}), GeometryError);   // rank 1
  CHECK_THROWS_AS(ConvexBody::vrep({{1.0, 0.0}, {2.0, 0.0}}), GeometryError);   // degenerate hull
  CHECK_THROWS_AS(ConvexBody::vrep({{1.0, 0.0}, {0.0, 1.0, 0.0}}), GeometryError);
  CHECK_THROWS_AS(ConvexBody::vrep({{1.0, std::nan("")}}), GeometryError);
  CHECK_NOTHROW(ConvexBody::hrep({{1.0, 0.0}, {0.0, 1.0}}));
  CHECK_NOTHROW(ConvexBody::vrep({{1.0, 1.0}, {1.0, -1.0}}));
}

TEST_CASE("polar closed forms") {
  for (int m : {1, 2, 3}) {
    const ConvexBody p1 = polar(cross(m));
    CHECK(p1.is_lp());
    CHECK(p1.lp().exponent.is_inf());
    CHECK(p1.lp().scale == doctest::Approx(1.0));

    const ConvexBody p2 = polar(unit_ball(m));
    CHECK(p2.lp().exponent.value() == doctest::Approx(2.0));
  }
  const ConvexBody scaled_ball = ConvexBody::lp_ball(LpExponent::finite(3.0), 2, 2.0);
  const ConvexBody sp = polar(scaled_ball);
  CHECK(sp.lp().exponent.value() == doctest::Approx(1.5));
  CHECK(sp.lp().scale == doctest::Approx(0.5));

  const ConvexBody octa = ConvexBody::vrep({{1.0, 0.0}, {0.0, 1.0}});
  const ConvexBody sq = polar(octa);
  REQUIRE(sq.is_hrep());
  CHECK(sq.h().rows == std::vector<Vec>{{1.0, 0.0}, {0.0, 1.0}});
}

TEST_CASE("polar is an involution on every variant") {
  const std::vector<ConvexBody> bodies = {
      cross(3),
      ConvexBody::lp_ball(LpExponent::finite(1.5), 2, 0.7),
      cube(2),
      ConvexBody::hrep({{1.0, 1.0}, {1.0, -1.0}, {0.5, 0.25}}),
      ConvexBody::vrep({{2.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}}),
  };
  for (const auto& b : bodies) CHECK(approx_equal(polar(polar(b)), b));
}

TEST_CASE("support_max closed forms and grid oracle") {
  const Vec y = {3.0, 4.0};
  CHECK(support_max(cross(2), y) == doctest::Approx(4.0));
  CHECK(support_max(unit_ball(2), y) == doctest::Approx(5.0));
  CHECK(support_max(cube(2), y) == doctest::Approx(7.0));

  // H-representation of the unit square, against a dense box scan.
  const std::vector<Vec> square_rows = {{1.0, 0.0}, {0.0, 1.0}};
  const double via_lp = support_max(ConvexBody::hrep(square_rows), y);
  CHECK(via_lp == doctest::Approx(7.0));
  CHECK(via_lp == doctest::Approx(oracles::grid_support_max_2d(square_rows, y, 1.5, 801)).epsilon(1e-2));

  // V-representation: max over vertices.
  CHECK(support_max(ConvexBody::vrep({{1.0, 1.0}, {1.0, -1.0}}), {1.0, 0.0}) == doctest::Approx(1.0));
}

TEST_CASE("gauge closed forms") {
  CHECK(gauge(cross(3), {0.2, 0.3, 0.4}) == doctest::Approx(0.9));
  CHECK(gauge(ConvexBody::lp_ball(LpExponent::finite(2.0), 3, 2.0), {1.0, 0.0, 0.0}) ==
        doctest::Approx(0.5));
  CHECK(gauge(unit_ball(2), {0.0, 0.0}) == 0.0);
}

TEST_CASE("gauge of a vertex-polytope against bisection oracle") {
  const std::vector<Vec> verts = {{2.0, 0.0}, {0.0, 1.0}};
  const ConvexBody diamond = ConvexBody::vrep(verts);
  const std::vector<Vec> full = {{2.0, 0.0}, {0.0, 1.0}, {-2.0, 0.0}, {0.0, -1.0}};
  // (1,1) lies outside: the edge from (2,0) to (0,1) is the line x/2 + y = 1,
  // and 1/2 + 1 = 3/2. Frozen from the bisection oracle.
  CHECK(oracles::gauge_by_bisection_2d(full, {1.0, 1.0}) == doctest::Approx(1.5).epsilon(5e-4));
  CHECK(gauge(diamond, {1.0, 1.0}) == doctest::Approx(1.5));
  CHECK(gauge(diamond, {1.0, 0.5}) == doctest::Approx(1.0));
  CHECK(contains(diamond, {1.0, 0.5}));
  CHECK_FALSE(contains(diamond, {1.0, 1.0}));
}

TEST_CASE("gauge is a norm") {
  Rng rng(2024);
  const std::vector<ConvexBody> bodies = {
      cross(3), unit_ball(3), cube(3),
      ConvexBody::hrep({{1.0, 1.0, 0.0}, {0.0, 1.0, 1.0}, {1.0, 0.0, 1.0}}),
      ConvexBody::vrep({{1.0, 0.0, 0.5}, {0.0, 1.0, 0.0}, {0.3, -0.2, 1.0}})};
  for (const auto& body : bodies) {
    for (int t = 0; t < 25; ++t) {
      Vec x(3), y(3);
      for (auto& c : x) c = rng.normal();
      for (auto& c : y) c = rng.normal();
      const double lam = rng.uniform(-3.0, 3.0);
      CHECK(gauge(body, scaled(x, lam)) == doctest::Approx(std::abs(lam) * gauge(body, x)).epsilon(1e-9));
      CHECK(gauge(body, add_scaled(x, y, 1.0)) <= gauge(body, x) + gauge(body, y) + 1e-9);
      // Generalized Cauchy-Schwarz between dual norms.
      const double sup = support_max(body, y);
      if (sup > 1e-9) CHECK(gauge(body, x) >= std::abs(dot(x, y)) / sup - 1e-9);
      CHECK(gauge(body, x) == doctest::Approx(support_max(polar(body), x)));
    }
  }
}

TEST_CASE("lp_support on small polytopes") {
  const auto cube_sol = lp_support({{1.0, 0.0}, {0.0, 1.0}}, {1.0, 2.0});
  CHECK(cube_sol.value == doctest::Approx(3.0));
  CHECK(cube_sol.point[0] == doctest::Approx(1.0));
  CHECK(cube_sol.point[1] == doctest::Approx(1.0));

  // Rotated square |x1+x2|<=1, |x1-x2|<=1 has vertices (+-1,0),(0,+-1).
  const std::vector<Vec> rot = {{1.0, 1.0}, {1.0, -1.0}};
  const auto rot_sol = lp_support(rot, {1.0, 0.0});
  CHECK(rot_sol.value == doctest::Approx(1.0));
  CHECK(rot_sol.point[0] == doctest::Approx(1.0));
  CHECK(rot_sol.point[1] == doctest::Approx(0.0).epsilon(1e-9));
  const std::vector<Vec> rot_vertices = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
  double vertex_best = 0.0;
  for (const auto& v : rot_vertices) vertex_best = std::max(vertex_best, v[0]);
  CHECK(rot_sol.value == doctest::Approx(vertex_best));

  CHECK(lp_support({{1.0, 0.0}, {0.0, 1.0}}, {0.0, 0.0}).value == doctest::Approx(0.0));
  CHECK_THROWS_AS(lp_support({{1.0, 0.0}}, {0.0, 1.0}), LpError);  // unbounded direction
}

TEST_CASE("lp_support agrees with vertex enumeration on random 2-D polytopes") {
  Rng rng(555);
  for (int t = 0; t < 20; ++t) {
    std::vector<Vec> rows;
    for (int i = 0; i < 4; ++i) {
      const double phi = rng.uniform(0.0, 3.14159);
      rows.push_back({std::cos(phi), std::sin(phi)});
    }
    ConvexBody body = ConvexBody::hrep(rows);
    Vec y = {rng.normal(), rng.normal()};
    // Vertex oracle: intersect every pair of constraint lines (either sign),
    // keep feasible points, take the max inner product.
    double best = 0.0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = i + 1; j < rows.size(); ++j) {
        for (double si : {-1.0, 1.0}) {
          for (double sj : {-1.0, 1.0}) {
            const double det = rows[i][0] * rows[j][1] - rows[i][1] * rows[j][0];
            if (std::abs(det) < 1e-9) continue;
            const Vec p = {(si * rows[j][1] - sj * rows[i][1]) / det,
                           (sj * rows[i][0] - si * rows[j][0]) / det};
            bool feasible = true;
            for (const auto& r : rows) feasible = feasible && std::abs(dot(r, p)) <= 1.0 + 1e-9;
            if (feasible) best = std::max(best, std::abs(dot(y, p)));
          }
        }
      }
    }
    CHECK(support_max(body, y) == doctest::Approx(best).epsilon(1e-6));
  }
}

TEST_CASE("lattice point enumeration") {
  const auto cube_pts = lattice_points(scale_body(cube(2), 2.0));
  CHECK(cube_pts.size() == 25);
  CHECK(cube_pts.front() == std::vector<int>{-2, -2});
  CHECK(cube_pts.back() == std::vector<int>{2, 2});

  const auto disk_pts = lattice_points(scale_body(unit_ball(2), 2.0));
  CHECK(disk_pts.size() == 13);  // (0,0), 4 axis at 1, 4 diagonal, 4 axis at 2

  CHECK_THROWS_AS(lattice_points(scale_body(cube(3), 1000.0)), GeometryError);
}

TEST_CASE("width and diameter") {
  for (int m : {2, 3}) {
    const WidthDiameter wd = width_diameter(unit_ball(m));
    CHECK(wd.width == doctest::Approx(2.0));
    CHECK(wd.diameter == doctest::Approx(2.0));
  }
  const WidthDiameter sq = width_diameter(cube(2));
  CHECK(sq.width == doctest::Approx(2.0));
  CHECK(sq.diameter == doctest::Approx(2.0 * kSqrt2));

  const WidthDiameter oc = width_diameter(cross(2));
  CHECK(oc.width == doctest::Approx(kSqrt2));
  CHECK(oc.diameter == doctest::Approx(2.0));

  // d(V*)/2 = 2/w(V) with V the octahedron, V* the square.
  CHECK(width_diameter(polar(cross(2))).diameter / 2.0 == doctest::Approx(2.0 / kSqrt2).epsilon(1e-9));
}

TEST_CASE("width-diameter chain for closed-form and polytope bodies") {
  const std::vector<ConvexBody> exact = {
      cross(2), unit_ball(3), cube(3), ConvexBody::lp_ball(LpExponent::finite(1.5), 2, 0.8),
      ConvexBody::hrep({{1.0, 1.0}, {1.0, -1.0}})};
  for (const auto& V : exact) {
    const ConvexBody B = unit_ball(V.dim());
    const double t1 = width_diameter(polar(V)).diameter / 2.0;
    const double t2 = sharp_constant(B, polar(V)).value;
    const double t3 = sharp_constant(V, B).value;
    const double t4 = 2.0 / width_diameter(V).width;
    CHECK(t1 == doctest::Approx(t3).epsilon(1e-9));
    CHECK(t2 == doctest::Approx(t3).epsilon(1e-9));
    CHECK(t4 == doctest::Approx(t3).epsilon(1e-9));
  }
}

TEST_CASE("scaling moves gauge and support in opposite directions") {
  const ConvexBody V = ConvexBody::vrep({{1.0, 0.3}, {-0.2, 1.0}});
  const Vec x = {0.7, -1.1};
  for (double s : {0.5, 2.0, 10.0}) {
    const ConvexBody sV = scale_body(V, s);
    CHECK(gauge(sV, x) == doctest::Approx(gauge(V, x) / s).epsilon(1e-9));
    CHECK(support_max(sV, x) == doctest::Approx(s * support_max(V, x)).epsilon(1e-9));
  }
}
