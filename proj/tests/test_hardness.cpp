#include <doctest.h>

#include <cmath>
#include <cstdint>

#include "pwt/dp.hpp"
#include "pwt/hardness.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace pwt;

TEST_CASE("capacitated reduction: YES instances top out at benefit 0") {
  SspInstance yes{{3, 5, 8}, 8};
  Instance inst = reduce_capacitated(yes);
  CHECK(inst.capacity == 8);
  CHECK(inst.v_max == 2.0);
  CHECK(inst.v_min == 1.0);
  CHECK(inst.rent == 8.0);

  SolveResult r = brute_force(inst);
  CHECK(r.eval.benefit == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(r.selection.total_weight == 8);
  // Both {3,5} and {8} reach weight 8; the lexicographically smaller
  // decision vector (0,0,1) wins the tie.
  CHECK(r.selection.bits == std::vector<bool>{false, false, true});
}

TEST_CASE("capacitated reduction: NO instances stay strictly negative") {
  SspInstance no{{3, 5}, 4};
  Instance inst = reduce_capacitated(no);
  SolveResult r = brute_force(inst);
  CHECK(r.eval.benefit == doctest::Approx(-0.2).epsilon(1e-9));
  CHECK(r.eval.benefit < -1e-9);
}

TEST_CASE("capacitated reduction: a single value equal to the target") {
  SspInstance one{{7}, 7};
  SolveResult r = brute_force(reduce_capacitated(one));
  CHECK(r.eval.benefit == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(r.selection.bits == std::vector<bool>{true});
}

TEST_CASE("unconstrained reduction pads the problem and caps the curve at the padded target") {
  SspInstance yes{{3, 5, 8}, 8};
  Instance inst = reduce_unconstrained(yes);
  // Forcing element 17 joins the items; capacity holds everything.
  REQUIRE(inst.item_count() == 4);
  CHECK(inst.items[3].weight == 17);
  CHECK(inst.capacity == 33);
  CHECK(inst.v_max == doctest::Approx(50.0 / 33.0).epsilon(1e-15));
  CHECK(inst.v_min == doctest::Approx(17.0 / 33.0).epsilon(1e-15));
  CHECK(inst.rent == doctest::Approx(625.0 / 33.0).epsilon(1e-15));

  SolveResult r = brute_force(inst);
  CHECK(r.eval.benefit == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(r.selection.total_weight == 25);  // 8 + 17
  CHECK(r.selection.bits == std::vector<bool>{false, false, true, true});
}

TEST_CASE("unconstrained reduction: NO instances stay strictly negative") {
  SspInstance no{{2, 3}, 4};
  SolveResult r = brute_force(reduce_unconstrained(no));
  CHECK(r.eval.benefit == doctest::Approx(-1.0 / 11.0).epsilon(1e-9));
  CHECK(r.eval.benefit < -1e-9);
}

TEST_CASE("unconstrained reduction: single value hits the padded target with all items") {
  SspInstance one{{4}, 4};
  Instance inst = reduce_unconstrained(one);
  CHECK(inst.capacity == 9);
  SolveResult r = brute_force(inst);
  CHECK(r.eval.benefit == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(r.selection.bits == std::vector<bool>{true, true});
}

TEST_CASE("curve values at the endpoints") {
  const CurveParams cap{8, 8};
  CHECK(curve_value(CurveKind::capacitated, cap, 8.0) == 0.0);
  CHECK(curve_value(CurveKind::capacitated, cap, 0.0) == -4.0);

  const CurveParams unc = curve_params(CurveKind::unconstrained, SspInstance{{3, 5, 8}, 8});
  CHECK(unc.capacity == 33);
  CHECK(unc.target == 25);
  CHECK(curve_value(CurveKind::unconstrained, unc, 25.0) == 0.0);
  CHECK(curve_value(CurveKind::unconstrained, unc, 0.0) == doctest::Approx(-12.5));
}

TEST_CASE("curve domain and parameter validation") {
  const CurveParams cap{8, 8};
  CHECK_THROWS_AS(curve_value(CurveKind::capacitated, cap, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(curve_value(CurveKind::capacitated, cap, 8.5), std::invalid_argument);
  CHECK_THROWS_AS(curve_value(CurveKind::capacitated, CurveParams{8, 9}, 1.0),
                  std::invalid_argument);
  // W >= 2Q has no peaked curve.
  CHECK_THROWS_AS(curve_value(CurveKind::unconstrained, CurveParams{20, 10}, 1.0),
                  std::invalid_argument);
}

TEST_CASE("curve is zero at the target and strictly negative elsewhere") {
  auto sweep = [](CurveKind kind, const CurveParams& p) {
    CHECK(std::abs(curve_value(kind, p, static_cast<double>(p.target))) <= 1e-9);
    for (std::int64_t w = 0; w <= p.capacity; ++w) {
      if (w == p.target) continue;
      CHECK(curve_value(kind, p, static_cast<double>(w)) < 0.0);
    }
  };
  sweep(CurveKind::capacitated, CurveParams{8, 8});
  sweep(CurveKind::capacitated, CurveParams{10000, 10000});
  sweep(CurveKind::unconstrained, curve_params(CurveKind::unconstrained, SspInstance{{3, 5, 8}, 8}));
  // A padded instance close to the 10^4 sweep bound.
  SspInstance big{{1249, 2251, 997, 499}, 3500};
  const CurveParams bp = curve_params(CurveKind::unconstrained, big);
  CHECK(bp.capacity == 2 * (1249 + 2251 + 997 + 499) + 1);
  sweep(CurveKind::unconstrained, bp);
}

TEST_CASE("curve is concave: second differences stay non-positive") {
  auto check_concave = [](CurveKind kind, const CurveParams& p) {
    for (std::int64_t w = 1; w < p.capacity; ++w) {
      const double lo = curve_value(kind, p, static_cast<double>(w - 1));
      const double mid = curve_value(kind, p, static_cast<double>(w));
      const double hi = curve_value(kind, p, static_cast<double>(w + 1));
      CHECK(lo + hi - 2.0 * mid <= 1e-12);
    }
  };
  check_concave(CurveKind::capacitated, CurveParams{500, 500});
  check_concave(CurveKind::unconstrained,
                curve_params(CurveKind::unconstrained, SspInstance{{40, 60, 17}, 77}));
}

TEST_CASE("reduced instances decide subset-sum, against the meet-in-the-middle oracle") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const SspInstance ssp = pwt_test::random_ssp(seed);
    const bool expected = pwt_test::ssp_reachable(ssp.values, ssp.target);
    for (const Instance& inst :
         {reduce_capacitated(ssp), reduce_unconstrained(ssp)}) {
      const bool answered = brute_force(inst).eval.benefit >= -1e-9;
      CHECK(answered == expected);
    }
  }
}

TEST_CASE("dp agrees with brute force on reduced instances") {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    const SspInstance ssp = pwt_test::random_ssp(seed);
    for (const Instance& inst :
         {reduce_capacitated(ssp), reduce_unconstrained(ssp)}) {
      const double oracle = brute_force(inst).eval.benefit;
      CHECK(dp_solve_value(inst).benefit == doctest::Approx(oracle).epsilon(1e-9));
    }
  }
}

TEST_CASE("ssp validation") {
  CHECK_THROWS_AS((SspInstance{{}, 3}).validate(), std::invalid_argument);
  CHECK_THROWS_AS((SspInstance{{1, 2}, 4}).validate(), std::invalid_argument);  // target > total
  CHECK_THROWS_AS((SspInstance{{1, 0}, 1}).validate(), std::invalid_argument);
  CHECK_THROWS_AS((SspInstance{{1, 2}, 0}).validate(), std::invalid_argument);
  CHECK_NOTHROW((SspInstance{{1, 2}, 3}).validate());
}
