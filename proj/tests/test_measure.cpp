#include <catch2/catch_amalgamated.hpp>

#include "gaussbubble/measure.hpp"

#include <random>

using namespace gbb;

namespace {

Vector vec2(double x, double y) {
  Vector v(2);
  v << x, y;
  return v;
}

// Brute-force oracle for the gamma_1 measure of a line piece in R^2:
// fixed-step Simpson over the truncated parameter range, independent of the
// closed-form path.
double line_piece_oracle(const Vec2& p, const Vec2& u, double lo, double hi) {
  lo = std::max(lo, -12.0);
  hi = std::min(hi, 12.0);
  const int n = 40000;
  const double h = (hi - lo) / n;
  auto f = [&](double s) {
    const Vec2 x = p + s * u;
    return std::exp(-0.5 * x.squaredNorm()) / kSqrt2Pi;
  };
  double acc = f(lo) + f(hi);
  for (int k = 1; k < n; ++k) acc += (k % 2 == 1 ? 4.0 : 2.0) * f(lo + k * h);
  return acc * h / 3.0;
}

}  // namespace

TEST_CASE("gaussian volume closed forms") {
  SECTION("half-space through the origin") {
    MeasureResult r = gaussian_volume(half_space_region(vec2(1, 0), 0.0));
    REQUIRE(std::abs(r.value - 0.5) < 1e-15);
    REQUIRE(r.method == MeasureMethod::ClosedForm);
    REQUIRE(r.abs_error_bound <= 1e-14);
  }
  SECTION("offset half-space against the quadrature route") {
    const double c = 0.2533471031357997;  // quantile of 0.6, frozen in test_normal
    MeasureResult closed = gaussian_volume(half_space_region(vec2(0, 1), c));
    REQUIRE(std::abs(closed.value - 0.6) < 1e-12);
    MeasureResult quad = gaussian_volume(half_space_region(vec2(0, 1), c), MeasureRoute::Quadrature);
    REQUIRE(std::abs(quad.value - closed.value) < closed.abs_error_bound + quad.abs_error_bound);
  }
  SECTION("120 degree sector has volume 1/3") {
    SimplicialPartition p = make_simplicial_partition(3);
    for (int i = 1; i <= 3; ++i) {
      MeasureResult r = gaussian_volume(sector_region(p, i));
      REQUIRE(std::abs(r.value - 1.0 / 3.0) < 1e-12);
    }
  }
  SECTION("sector volumes agree across routes") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unif(-0.8, 0.8);
    for (int m : {2, 3, 4}) {
      Vector y(m - 1);
      for (int c = 0; c < m - 1; ++c) y(c) = unif(rng);
      SimplicialPartition p = make_simplicial_partition(m, y);
      for (int i = 1; i <= m; ++i) {
        const Region reg = sector_region(p, i);
        MeasureResult primary = gaussian_volume(reg);
        MeasureResult qmc = gaussian_volume(reg, MeasureRoute::Qmc, 17);
        REQUIRE(std::abs(primary.value - qmc.value) < std::max(qmc.abs_error_bound, 5e-4));
        if (m == 3) {
          MeasureResult bvn = gaussian_volume(reg, MeasureRoute::ClosedForm);
          REQUIRE(std::abs(primary.value - bvn.value) < 1e-11);
        }
      }
    }
  }
  SECTION("partition volumes sum to one") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    for (int m : {2, 3, 4}) {
      Vector y(m - 1);
      for (int c = 0; c < m - 1; ++c) y(c) = unif(rng);
      SimplicialPartition p = make_simplicial_partition(m, y);
      double sum = 0.0, err = 0.0;
      for (int i = 1; i <= m; ++i) {
        MeasureResult r = gaussian_volume(sector_region(p, i));
        sum += r.value;
        err += r.abs_error_bound;
      }
      REQUIRE(std::abs(sum - 1.0) < err + 1e-12);
    }
  }
  SECTION("interval unions and products") {
    Region slab = interval_union_region({{-0.5, 1.2}});
    REQUIRE(std::abs(gaussian_volume(slab).value - (normal_cdf(1.2) - normal_cdf(-0.5))) < 1e-15);
    Region fat = product_region(slab, 3);
    REQUIRE(gaussian_volume(fat).value == gaussian_volume(slab).value);
    REQUIRE_THROWS_AS(interval_union_region({{0.5, 0.2}}), std::invalid_argument);
  }
  SECTION("polygon volume against the product closed form and QMC") {
    std::vector<Vec2> square{{-1, -1}, {1, -1}, {1, 1}, {-1, 1}};
    MeasureResult r = gaussian_volume(polygon_region(square));
    const double side = normal_cdf(1.0) - normal_cdf(-1.0);
    REQUIRE(std::abs(r.value - side * side) < 1e-9);
    MeasureResult q = gaussian_volume(polygon_region(square), MeasureRoute::Qmc, 3);
    REQUIRE(std::abs(r.value - q.value) < std::max(q.abs_error_bound, 1e-3));
    REQUIRE_THROWS_AS(polygon_region({{0, 0}, {1, 0}, {0.5, -0.5}}), std::invalid_argument);
  }
}

TEST_CASE("interface measures") {
  SimplicialPartition p3 = make_simplicial_partition(3);
  SECTION("hyperplane through the origin has unit weighted area") {
    for (int d : {1, 2, 3}) {
      InterfacePiece plane;
      plane.kind = PieceKind::Hyperplane;
      plane.point = Vector::Zero(d);
      plane.normal = Vector::Unit(d, 0);
      plane.label_i = 1;
      plane.label_j = 2;
      plane.ambient_dim = d;
      MeasureResult r = interface_measure(plane);
      REQUIRE(std::abs(r.value - 1.0) < 1e-15);
    }
  }
  SECTION("ray from the origin has measure 1/2") {
    auto pieces = interfaces_of(p3);
    for (const auto& pc : pieces) {
      MeasureResult r = interface_measure(pc);
      REQUIRE(std::abs(r.value - 0.5) < 1e-15);
      MeasureResult q = interface_measure(pc, MeasureRoute::Quadrature);
      REQUIRE(std::abs(q.value - r.value) < 1e-12);
    }
  }
  SECTION("full line at distance t") {
    const double t = 0.4307272992954576;  // quantile of 2/3
    InterfacePiece line;
    line.kind = PieceKind::Hyperplane;
    line.point = vec2(t, 0.0);
    line.normal = vec2(1.0, 0.0);
    line.label_i = 1;
    line.label_j = 2;
    line.ambient_dim = 2;
    MeasureResult r = interface_measure(line);
    REQUIRE(std::abs(r.value - std::exp(-0.5 * t * t)) < 1e-15);
    REQUIRE(std::abs(r.value - 0.911409) < 1e-6);  // frozen from e^{-t^2/2}
    MeasureResult q = interface_measure(line, MeasureRoute::Quadrature);
    REQUIRE(std::abs(q.value - r.value) < 1e-12);
  }
  SECTION("segments match the brute-force oracle") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> unif(-1.5, 1.5);
    for (int trial = 0; trial < 25; ++trial) {
      const Vec2 p(unif(rng), unif(rng));
      double th = unif(rng);
      const Vec2 u(std::cos(th), std::sin(th));
      double lo = unif(rng), hi = lo + std::abs(unif(rng)) + 0.1;
      InterfacePiece seg;
      seg.kind = PieceKind::Segment;
      seg.point = vec2(p.x(), p.y());
      seg.frame.push_back(vec2(u.x(), u.y()));
      seg.normal = vec2(-u.y(), u.x());
      seg.extent_lo = lo;
      seg.extent_hi = hi;
      seg.label_i = 1;
      seg.label_j = 2;
      seg.ambient_dim = 2;
      MeasureResult r = interface_measure(seg);
      REQUIRE(std::abs(r.value - line_piece_oracle(p, u, lo, hi)) < 1e-10);
      MeasureResult q = interface_measure(seg, MeasureRoute::Quadrature);
      REQUIRE(std::abs(q.value - r.value) < r.abs_error_bound + q.abs_error_bound + 1e-13);
    }
  }
  SECTION("planar wedge through the origin has measure angle/(2 pi)") {
    SimplicialPartition p4 = make_simplicial_partition(4);
    double total = 0.0;
    for (const auto& pc : interfaces_of(p4)) {
      MeasureResult r = interface_measure(pc);
      const double expected = (pc.extent_hi - pc.extent_lo) / kTwoPi;
      REQUIRE(std::abs(r.value - expected) < 1e-12);
      total += r.value;
      MeasureResult q = interface_measure(pc, MeasureRoute::Quadrature);
      REQUIRE(std::abs(q.value - r.value) < 1e-9);
    }
    REQUIRE(std::abs(total - 3.0 * std::acos(-1.0 / 3.0) / kPi) < 1e-11);
  }
  SECTION("rotation invariance about the origin") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
      const double t = unif(rng), rot = 2.0 * unif(rng);
      InterfacePiece seg;
      seg.kind = PieceKind::Segment;
      const double th = unif(rng);
      seg.point = vec2(t * std::cos(th + kPi / 2), t * std::sin(th + kPi / 2));
      seg.frame.push_back(vec2(std::cos(th), std::sin(th)));
      seg.normal = vec2(-std::sin(th), std::cos(th));
      seg.extent_lo = unif(rng);
      seg.extent_hi = seg.extent_lo + 1.3;
      seg.label_i = 1;
      seg.label_j = 2;
      seg.ambient_dim = 2;
      InterfacePiece rotated = seg;
      Eigen::Matrix2d R;
      R << std::cos(rot), -std::sin(rot), std::sin(rot), std::cos(rot);
      rotated.point = R * seg.point;
      rotated.frame[0] = R * seg.frame[0];
      rotated.normal = R * seg.normal;
      REQUIRE(std::abs(interface_measure(seg).value - interface_measure(rotated).value) < 1e-10);
    }
  }
  SECTION("product structure: interfaces keep their measure across trailing factors") {
    // the m=2 interface in R^{1+k} is a hyperplane with the same e^{-t^2/2} measure
    Vector y(1);
    y << 0.37;
    for (int extra : {0, 1, 3}) {
      SimplicialPartition p = make_simplicial_partition(2, y, extra);
      auto pieces = interfaces_of(p);
      MeasureResult r = interface_measure(pieces[0]);
      REQUIRE(std::abs(r.value - std::exp(-0.5 * 0.37 * 0.37)) < 1e-14);
    }
  }
}

TEST_CASE("barycenters") {
  SECTION("half-space {x1 <= 0} in R^2") {
    VectorResult b = barycenter(half_space_region(vec2(1, 0), 0.0));
    REQUIRE(std::abs(b.value(0) + 0.3989422804014327) < 1e-6);  // -phi(0), quadrature oracle below
    REQUIRE(std::abs(b.value(1)) < 1e-15);
    const double oracle =
        integrate_adaptive([](double x) { return x * normal_pdf(x); }, -9.0, 0.0, 1e-13).value;
    REQUIRE(std::abs(b.value(0) - oracle) < 1e-12);
  }
  SECTION("all of the plane") {
    Region all = product_region(interval_union_region(
                                    {{-std::numeric_limits<double>::infinity(),
                                      std::numeric_limits<double>::infinity()}}),
                                1);
    VectorResult b = barycenter(all);
    REQUIRE(b.value.norm() < 1e-14);
  }
  SECTION("120 degree sector barycenters align with directions and telescope") {
    SimplicialPartition p = make_simplicial_partition(3);
    Vector sum = Vector::Zero(2);
    for (int i = 1; i <= 3; ++i) {
      VectorResult b = barycenter(sector_region(p, i));
      sum += b.value;
      const Vector& zi = p.directions.z(i);
      const double proj = b.value.dot(zi);
      REQUIRE(proj > 0.0);
      REQUIRE((b.value - proj * zi).norm() < 1e-10);
    }
    REQUIRE(sum.norm() < 1e-8);
  }
  SECTION("sector barycenters telescope for m=4 and shifted partitions") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> unif(-0.7, 0.7);
    for (int m : {2, 3, 4}) {
      Vector y(m - 1);
      for (int c = 0; c < m - 1; ++c) y(c) = unif(rng);
      SimplicialPartition p = make_simplicial_partition(m, y);
      Vector sum = Vector::Zero(m - 1);
      double err = 0.0;
      for (int i = 1; i <= m; ++i) {
        VectorResult b = barycenter(sector_region(p, i));
        sum += b.value;
        err += b.error.sum();
      }
      REQUIRE(sum.norm() < err + 1e-8);
    }
  }
  SECTION("m=4 sector barycenter against QMC") {
    Vector y(3);
    y << 0.2, -0.3, 0.1;
    SimplicialPartition p = make_simplicial_partition(4, y);
    VectorResult b = barycenter(sector_region(p, 2));
    for (int c = 0; c < 3; ++c) {
      QmcResult q = qmc_gaussian_mean(
          [&](const double* x) {
            Vector v = Eigen::Map<const Vector>(x, 3);
            return sector_of(v, p) == 2 ? v(c) : 0.0;
          },
          3, 23);
      REQUIRE(std::abs(b.value(c) - q.value) < std::max(q.error, 1e-3));
    }
  }
  SECTION("polygon barycenter matches quadrature oracle") {
    std::vector<Vec2> tri{{0.2, -0.1}, {1.4, 0.3}, {0.1, 1.2}};
    Region reg = polygon_region(tri);
    VectorResult b = barycenter(reg);
    for (int c = 0; c < 2; ++c) {
      QmcResult q = qmc_gaussian_mean(
          [&](const double* x) {
            const Vec2 pt(x[0], x[1]);
            // same crossing test as the library, re-derived here on purpose
            bool inside = false;
            for (size_t k = 0; k < tri.size(); ++k) {
              const Vec2 a = tri[k], bb = tri[(k + 1) % tri.size()];
              if ((a.y() > pt.y()) != (bb.y() > pt.y())) {
                const double xc = a.x() + (pt.y() - a.y()) / (bb.y() - a.y()) * (bb.x() - a.x());
                if (pt.x() < xc) inside = !inside;
              }
            }
            return inside ? pt(c) : 0.0;
          },
          2, 29);
      REQUIRE(std::abs(b.value(c) - q.value) < std::max(q.error, 1e-3));
    }
  }
}

TEST_CASE("barycenter rank diagnostic") {
  SECTION("two half-spaces have rank 1") {
    std::vector<Region> regions{half_space_region(vec2(1, 0), 0.0),
                                half_space_region(vec2(-1, 0), 0.0)};
    RankReport rep = barycenter_rank_report(regions, 1e-8);
    REQUIRE(rep.rank == 1);
    REQUIRE(std::abs(rep.barycenters(0, 0) + 0.398942) < 1e-6);
    REQUIRE(std::abs(rep.barycenters(1, 0) - 0.398942) < 1e-6);
  }
  SECTION("simplicial partitions have rank m-1") {
    for (int m : {2, 3, 4}) {
      Vector y = Vector::Constant(m - 1, 0.15);
      SimplicialPartition p = make_simplicial_partition(m, y);
      std::vector<Region> regions;
      for (int i = 1; i <= m; ++i) regions.push_back(sector_region(p, i));
      REQUIRE(barycenter_rank(regions, 1e-8) == m - 1);
    }
  }
  SECTION("parallel slabs have rank 1") {
    const double t = 0.4307272992954576;
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<Region> regions{product_region(interval_union_region({{-inf, -t}}), 1),
                                product_region(interval_union_region({{-t, t}}), 1),
                                product_region(interval_union_region({{t, inf}}), 1)};
    REQUIRE(barycenter_rank(regions, 1e-8) == 1);
  }
  SECTION("product partitions keep the base rank") {
    SimplicialPartition flat = make_simplicial_partition(3);
    SimplicialPartition fat = make_simplicial_partition(3, Vector::Zero(2), 2);
    std::vector<Region> base, prod;
    for (int i = 1; i <= 3; ++i) {
      base.push_back(sector_region(flat, i));
      prod.push_back(sector_region(fat, i));
    }
    REQUIRE(barycenter_rank(base, 1e-8) == barycenter_rank(prod, 1e-8));
  }
  SECTION("volume-sum violation is rejected") {
    std::vector<Region> regions{half_space_region(vec2(1, 0), 0.0),
                                half_space_region(vec2(1, 0), -0.5)};
    REQUIRE_THROWS_AS(barycenter_rank(regions, 1e-6), structural_violation);
  }
}
