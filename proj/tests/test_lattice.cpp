#include <doctest.h>

#include <random>

#include "hypermet/error.hpp"
#include "hypermet/lattice.hpp"
#include "oracles.hpp"

using namespace hypermet;

namespace {

RatMatrix mat(std::initializer_list<std::initializer_list<Rational>> rows) {
  std::vector<RatVector> r;
  for (auto& row : rows) r.emplace_back(row);
  return RatMatrix::from_rows(r, r.front().size());
}

Rational dist2(const RatMatrix& g, const IntVector& w, const RatVector& x) {
  RatVector y(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) y[i] = Rational(w[i]) - x[i];
  return oracle::form(oracle::to_dense(g), y);
}

const Rational half(1, 2);

}  // namespace

TEST_CASE("cvp_strictly_inside examples") {
  CHECK_FALSE(cvp_strictly_inside({RatMatrix::identity(2), {half, half}, half}));
  auto w = cvp_strictly_inside({RatMatrix::identity(2), {half, half}, Rational(3, 4)});
  REQUIRE(w);
  CHECK(*w == IntVector{0, 0});
  CHECK(dist2(RatMatrix::identity(2), *w, {half, half}) == half);
  Rational third(1, 3);
  CHECK_FALSE(cvp_strictly_inside({mat({{2, 1}, {1, 2}}), {third, third}, Rational(2, 3)}));
  CHECK_THROWS_AS(cvp_strictly_inside({mat({{1, 2}, {2, 1}}), {0, 0}, 1}), Error);
}

TEST_CASE("cvp_at_exact_radius examples") {
  CHECK(cvp_at_exact_radius({RatMatrix::identity(2), {half, half}, half}) ==
        std::vector<IntVector>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  CHECK(cvp_at_exact_radius({RatMatrix::identity(2), {0, 0}, 1}) ==
        std::vector<IntVector>{{-1, 0}, {0, -1}, {0, 1}, {1, 0}});
  CHECK(cvp_at_exact_radius({mat({{4}}), {half}, 1}) == std::vector<IntVector>{{0}, {1}});
  CHECK(cvp_at_exact_radius({mat({{4}}), {half}, Rational(1, 2)}).empty());
}

TEST_CASE("cvp budget is enforced") {
  EnumerationBudget tiny{3};
  CHECK_THROWS_AS(cvp_at_exact_radius({RatMatrix::identity(3), {0, 0, 0}, 9}, tiny), Error);
}

TEST_CASE("cvp agrees with the ellipsoid-box brute force") {
  std::mt19937_64 rng(101);
  int exact_hits = 0;
  for (int t = 0; t < 250; ++t) {
    std::size_t n = 1 + t % 4;
    RatMatrix g = oracle::random_pd(rng, n, 5);
    RatVector x(n);
    for (auto& xi : x) xi = oracle::random_rational(rng, -6, 6, 4);
    // Radius through a nearby lattice point, so the exact list is nonempty.
    IntVector w0(n);
    for (std::size_t i = 0; i < n; ++i) w0[i] = floor_of(x[i]) + static_cast<long>(rng() % 3) - 1;
    Rational r2 = dist2(g, w0, x);
    if (t % 7 == 0) r2 += Rational(1, 3);

    auto brute = oracle::brute_cvp(oracle::to_dense(g), x, r2);
    CVPQuery q{g, x, r2};
    auto exact = cvp_at_exact_radius(q);
    CHECK(exact == brute.exact);
    exact_hits += !exact.empty();
    CHECK(cvp_all_strictly_inside(q) == brute.inside);

    auto some = cvp_strictly_inside(q);
    CHECK(some.has_value() == !brute.inside.empty());
    if (some) {
      // Minimal distance, lexicographically first among ties.
      Rational best = dist2(g, brute.inside.front(), x);
      for (auto& w : brute.inside) best = std::min(best, dist2(g, w, x));
      IntVector first;
      for (auto& w : brute.inside)
        if (dist2(g, w, x) == best) {
          first = w;
          break;
        }
      CHECK(*some == first);
    }
  }
  CHECK(exact_hits > 150);
}

TEST_CASE("strict search is empty iff a slightly smaller radius finds nothing") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 100; ++t) {
    std::size_t n = 1 + t % 3;
    RatMatrix g = oracle::random_pd(rng, n, 4);
    RatVector x(n);
    for (auto& xi : x) xi = oracle::random_rational(rng, -3, 3, 3);
    Rational r2 = oracle::random_rational(rng, 1, 12, 4);
    auto brute = oracle::brute_cvp(oracle::to_dense(g), x, r2);
    // The minimum over the box is attained; r2' just above it but below r2.
    bool inside = cvp_strictly_inside({g, x, r2}).has_value();
    CHECK(inside == !brute.inside.empty());
    if (inside) {
      Rational m = dist2(g, brute.inside.front(), x);
      for (auto& w : brute.inside) m = std::min(m, dist2(g, w, x));
      CHECK_FALSE(cvp_strictly_inside({g, x, m}));
      CHECK(cvp_strictly_inside({g, x, (m + r2) / 2}));
    }
  }
}

TEST_CASE("psd_reduce examples") {
  // Generators (1,0), (0,1), (1,1).
  RatMatrix g = mat({{1, 0, 1}, {0, 1, 1}, {1, 1, 2}});
  auto red = psd_reduce(g);
  REQUIRE(red);
  CHECK(red->subfamily == std::vector<std::size_t>{0, 1});
  CHECK(red->reduced_gram == RatMatrix::identity(2));
  CHECK(red->expressions[2] == IntVector{1, 1});
  CHECK(red->expressions[0] == IntVector{1, 0});

  // Generators (2,0), (0,2), (1,1): the first pair fails integrality, but
  // (2,0), (1,1) generate (0,2) = 2·(1,1) - (2,0).
  auto skew = psd_reduce(mat({{4, 0, 2}, {0, 4, 2}, {2, 2, 2}}));
  REQUIRE(skew);
  CHECK(skew->subfamily == std::vector<std::size_t>{0, 2});
  CHECK(skew->expressions[1] == IntVector{-1, 2});

  // Generators 2 and 3 of Z: neither is an integral multiple of the other.
  CHECK_FALSE(psd_reduce(mat({{4, 6}, {6, 9}})));

  RatMatrix full = mat({{2, 1}, {1, 2}});
  auto id = psd_reduce(full, {{half, 0}});
  REQUIRE(id);
  CHECK(id->subfamily == std::vector<std::size_t>{0, 1});
  CHECK(id->reduced_gram == full);
  CHECK(id->points[0] == RatVector{half, 0});

  CHECK_THROWS_AS(psd_reduce(mat({{1, 2}, {2, 1}})), Error);
}

TEST_CASE("psd_reduce re-expresses points") {
  // Generators u0 = (1), u1 = (1): rank 1, x = (1/2, 0) is the point 1/2.
  auto red = psd_reduce(mat({{1, 1}, {1, 1}}), {{half, 0}});
  REQUIRE(red);
  CHECK(red->subfamily == std::vector<std::size_t>{0});
  CHECK(red->points[0] == RatVector{half});
  CHECK(red->expressions[1] == IntVector{1});
}

TEST_CASE("dispatch_norm_query examples") {
  RatMatrix ind = mat({{1, 2}, {2, 1}});
  for (auto x : {RatVector{0, 0}, RatVector{Rational(7, 3), -5}}) {
    for (Rational r2 : {Rational(0), Rational(-100), Rational(5)}) {
      auto r = dispatch_norm_query(ind, x, r2);
      CHECK(r.form_class == FormClass::Indefinite);
      REQUIRE(r.witness);
      CHECK(dist2(ind, *r.witness, x) < r2);
    }
  }

  auto pd = dispatch_norm_query(RatMatrix::identity(2), {half, half}, half);
  CHECK(pd.form_class == FormClass::PositiveDefinite);
  CHECK_FALSE(pd.witness);

  auto psd = dispatch_norm_query(mat({{1, 1}, {1, 1}}), {half, 0}, Rational(1, 4));
  CHECK(psd.form_class == FormClass::Semidefinite);
  CHECK_FALSE(psd.witness);
  auto psd2 = dispatch_norm_query(mat({{1, 1}, {1, 1}}), {half, 0}, Rational(1, 3));
  REQUIRE(psd2.witness);
  CHECK(dist2(mat({{1, 1}, {1, 1}}), *psd2.witness, {half, 0}) < Rational(1, 3));

  try {
    dispatch_norm_query(mat({{4, 6}, {6, 9}}), {half, 0}, Rational(1, 100));
    FAIL("expected psd-irreducible");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PsdIrreducible);
  }
}

TEST_CASE("indefinite dispatch witnesses recompute below the radius") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> e(-5, 5);
  int seen = 0;
  for (int t = 0; t < 400 && seen < 150; ++t) {
    std::size_t n = 2 + t % 3;
    RatMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        long v = e(rng);
        g(i, j) = v;
        g(j, i) = v;
      }
    auto sig = oracle::descartes_signature(oracle::to_dense(g));
    if (sig.minus == 0 || sig.plus == 0) continue;
    ++seen;
    RatVector x(n);
    for (auto& xi : x) xi = oracle::random_rational(rng, -20, 20, 7);
    Rational r2 = oracle::random_rational(rng, -50, 50, 3);
    auto r = dispatch_norm_query(g, x, r2);
    CHECK(r.form_class == FormClass::Indefinite);
    REQUIRE(r.witness);
    CHECK(dist2(g, *r.witness, x) < r2);
  }
  CHECK(seen >= 100);
}

TEST_CASE("find_negative_points on a positive definite form collects all") {
  // q(w) = wᵀw - (1,1)ᵀw + 0: negative nowhere on Z² (q = Σ w_i(w_i-1) ≥ 0).
  InhomogeneousForm f{RatMatrix::identity(2), {1, 1}, 0};
  auto r = find_negative_points(f, true);
  CHECK(r.form_class == FormClass::PositiveDefinite);
  CHECK(r.rank == 2);
  CHECK(r.witnesses.empty());
  // Shift the constant: q < 0 exactly on the four corners of the unit square.
  f.constant = Rational(-1, 2);
  r = find_negative_points(f, true);
  CHECK(r.witnesses == std::vector<IntVector>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  for (auto& w : r.witnesses) CHECK(f.value(w) < 0);
}
