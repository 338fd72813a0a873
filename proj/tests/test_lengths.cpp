#include <gtest/gtest.h>

#include <random>

#include "lengrp/groups/cayley.hpp"
#include "lengrp/lengths/axioms.hpp"
#include "lengrp/lengths/evaluator.hpp"
#include "lengrp/lengths/heisenberg.hpp"
#include "lengrp/lengths/seminorm.hpp"
#include "lengrp/lengths/stable.hpp"

using namespace lengrp;

namespace {

const IntMatrix kConnerMatrix{{0, 0, 0, -1}, {1, 0, 0, 2}, {0, 1, 0, -1}, {0, 0, 1, 2}};

const BallTable& ball12() {
  static const BallTable b = bfs_ball(CayleyGroup::heisenberg(), 12);
  return b;
}

// Shared metric large enough for every power in the |x|,|y| <= 3, |z| <= 4, k <= 20 family.
const HeisWordMetric& big_metric() {
  static const HeisWordMetric m(96, 36);
  return m;
}

}  // namespace

TEST(Blachere, Examples) {
  EXPECT_EQ(blachere_word_length(0, 0, 2), Int(6));
  EXPECT_EQ(blachere_word_length(2, 1, 1), Int(3));
  EXPECT_EQ(blachere_word_length(0, 0, 0), Int(0));
  EXPECT_EQ(blachere_word_length(3, -1, 0), Int(4));
  EXPECT_EQ(ball12().length(HeisElem{3, -1, 0}), 4U);
  EXPECT_FALSE(blachere_word_length(2, 1, 2).has_value());
}

TEST(Blachere, NormalizationUsesTheSymmetries) {
  EXPECT_EQ(blachere_normalize(HeisElem{-1, 3, -2}), (HeisElem{3, 1, 2}));
  EXPECT_EQ(blachere_normalize(HeisElem{2, -1, 0}), (HeisElem{2, 1, 0}));
  // The five symmetries hold for the true word length.
  const auto& b = bfs_ball(CayleyGroup::heisenberg(), 8);
  for (const auto& e : b.entries()) {
    const Int &x = e.coords[0], &y = e.coords[1], &z = e.coords[2];
    for (const HeisElem& s : {HeisElem{-x, y, -z}, HeisElem{x, -y, -z}, HeisElem{-x, -y, z}, HeisElem{y, x, z}})
      ASSERT_EQ(b.length(s), e.length) << to_string(HeisElem{x, y, z});
  }
}

TEST(Blachere, AgreesWithBreadthFirstSearch) {
  std::size_t covered = 0;
  for (const auto& e : ball12().entries()) {
    const auto d = blachere_word_length(e.coords[0], e.coords[1], e.coords[2]);
    if (!d) continue;
    ++covered;
    ASSERT_EQ(*d, e.length) << e.coords[0] << "," << e.coords[1] << "," << e.coords[2];
  }
  EXPECT_GT(covered, ball12().size() / 3);
}

TEST(WordLength, PathTags) {
  auto r = heis_word_length(0, 0, 1, 8);
  EXPECT_EQ(r.length, 4);
  EXPECT_EQ(r.path, LengthPath::formula);
  r = heis_word_length(1, 1, 5, 8);
  EXPECT_EQ(r.length, 8);
  EXPECT_EQ(r.path, LengthPath::formula);
  EXPECT_EQ(ball12().length(HeisElem{1, 1, 5}), 8U);
  r = heis_word_length(2, 1, 2, 8);
  EXPECT_EQ(r.path, LengthPath::oracle);
  EXPECT_EQ(r.length, Int(*ball12().length(HeisElem{2, 1, 2})));
  EXPECT_THROW(heis_word_length(12, 0, 1, 6), ResourceError);
}

TEST(WordLength, MetricMatchesBallEverywhere) {
  HeisWordMetric m(12, 6);
  for (const auto& e : ball12().entries())
    ASSERT_EQ(m.length(HeisElem{e.coords[0], e.coords[1], e.coords[2]}).length, e.length);
}

TEST(Swl, Examples) {
  EXPECT_EQ(swl_heisenberg(HeisElem{1, 1, 7}), 2);
  EXPECT_EQ(swl_heisenberg(HeisElem{0, 0, 9}), 0);
  EXPECT_EQ(swl_heisenberg(HeisElem{-3, 2, 0}), 5);
}

TEST(CentralPower, Examples) {
  EXPECT_EQ(central_power_word_length(1), 4);
  EXPECT_EQ(central_power_word_length(0), 0);
  EXPECT_EQ(central_power_word_length(30), 22);
  EXPECT_THROW(central_power_word_length(-1), PreconditionError);
  for (int n = 0; n <= 9; ++n)
    EXPECT_EQ(Int(*ball12().length(HeisElem{0, 0, n})), central_power_word_length(n)) << n;
}

TEST(Quadratic, Examples) {
  EXPECT_EQ(quadratic_length(HeisElem{1, 3, 0}), 9);
  EXPECT_EQ(quadratic_length(heis_c()), 0);
  EXPECT_EQ(quadratic_length(heis_pow(HeisElem{1, 2, 0}, 5)), 20);
  EXPECT_EQ(quadratic_length(HeisElem{-2, -6, 1}), 18);
  EXPECT_EQ(quadratic_length(HeisElem{2, 3, 0}), 0);
  EXPECT_EQ(quadratic_length(HeisElem{2, -2, 0}), 0);
}

TEST(Quadratic, OutgrowsStableWordLength) {
  Rational prev = -1;
  for (int n = 1; n <= 50; ++n) {
    const HeisElem g{1, n, 0};
    const Rational ratio = quadratic_length(g) / Rational(swl_heisenberg(g));
    EXPECT_EQ(ratio, Rational(n * n, n + 1));
    EXPECT_GT(ratio, prev);
    prev = ratio;
  }
  EXPECT_GT(quadratic_length(HeisElem{1, 12, 0}) / Rational(13), 10);
}

// ---- stable estimates ----

TEST(StableEstimate, Examples) {
  auto est = stable_length_estimate(big_metric(), HeisElem{1, 1, 0}, 30);
  for (const auto& s : est.samples) EXPECT_EQ(s.ratio.rational(), 2);
  EXPECT_EQ(est.exact_limit, Rational(2));
  EXPECT_TRUE(est.subadditive);

  est = stable_length_estimate(big_metric(), heis_c(), 100);
  EXPECT_EQ(est.samples[99].ratio.rational(), Rational(2, 5));
  EXPECT_EQ(est.exact_limit, Rational(0));

  est = stable_length_estimate(big_metric(), HeisElem{}, 10);
  for (const auto& s : est.samples) EXPECT_EQ(s.ratio.rational(), 0);
}

TEST(StableEstimate, FeketeInfimumIsMonotone) {
  for (const HeisElem& g : {HeisElem{0, 0, 3}, HeisElem{2, -1, 3}, HeisElem{1, 0, 4}}) {
    const auto est = stable_length_estimate(big_metric(), g, 20);
    ASSERT_FALSE(est.partial);
    EXPECT_TRUE(est.subadditive);
    for (std::size_t i = 1; i < est.samples.size(); ++i)
      EXPECT_LE(est.samples[i].infimum.rational(), est.samples[i - 1].infimum.rational());
    EXPECT_GE(est.infimum().rational(), Rational(swl_heisenberg(g)));
  }
}

TEST(StableEstimate, ConvergesToSwlWithinCentralSlack) {
  // 0 <= d(g^k)/k - (|x|+|y|) <= 2 ceil(2 sqrt(k|z|))/k, from g = b^y a^x c^z.
  for (int x = -3; x <= 3; ++x)
    for (int y = -3; y <= 3; ++y)
      for (int z = -4; z <= 4; ++z) {
        const HeisElem g{x, y, z};
        const auto est = stable_length_estimate(big_metric(), g, 20);
        ASSERT_FALSE(est.partial) << est.partial_reason;
        for (const auto& s : est.samples) {
          const Rational dev = s.ratio.rational() - Rational(swl_heisenberg(g));
          ASSERT_GE(dev, 0) << to_string(g) << " k=" << s.k;
          ASSERT_LE(dev, Rational(2 * ceil_two_sqrt(Int(s.k * std::abs(z))), s.k)) << to_string(g) << " k=" << s.k;
          if (z == 0) {
            ASSERT_EQ(dev, 0) << to_string(g) << " k=" << s.k;
          }
        }
      }
}

TEST(StableEstimate, CentralPartDecaysLikeInverseSqrt) {
  // d(c^{4k})/k = 2 ceil(4 sqrt k)/k: at k = 20 this is 36/20, far above 8/20.
  const auto est = stable_length_estimate(big_metric(), HeisElem{0, 0, 4}, 20);
  EXPECT_EQ(est.samples.back().ratio.rational(), Rational(9, 5));
}

TEST(StableEstimate, PartialOnOracleExhaustion) {
  HeisWordMetric small(6, 3);
  const auto est = stable_length_estimate(small, HeisElem{1, 0, 0}, 10);
  EXPECT_TRUE(est.partial);
  EXPECT_EQ(est.samples.size(), 6U);
  EXPECT_FALSE(est.exact_limit.has_value());
}

TEST(StableEstimate, GenericEvaluator) {
  const auto est = stable_length_estimate(swl_length(), Coords{2, -1, 5}, 5);
  for (const auto& s : est.samples) EXPECT_EQ(s.ratio.rational(), 3);
  EXPECT_THROW(stable_length_estimate(swl_length(), Coords{1, 1}, 5), PreconditionError);
  EXPECT_THROW(stable_length_estimate(swl_length(), Coords{1, 1, 1}, 0), PreconditionError);
}

// ---- sqrt bound ----

TEST(SqrtBound, WordLength) {
  const auto w = sqrt_bound_witness(word_length_evaluator(), 10000);
  EXPECT_EQ(w.k, 4);
  EXPECT_EQ(w.c, 4);
  EXPECT_TRUE(w.verified);
  EXPECT_EQ(w.checked, 10000);
}

TEST(SqrtBound, ZeroAndScaled) {
  auto w = sqrt_bound_witness(zero_length(Domain::heisenberg()), 100);
  EXPECT_EQ(w.k, 0);
  EXPECT_EQ(w.c, 2);
  EXPECT_TRUE(w.verified);
  w = sqrt_bound_witness(scaled_length(word_length_evaluator(), 2), 2000);
  EXPECT_EQ(w.k, 8);
  EXPECT_EQ(w.c, 6);
  EXPECT_TRUE(w.verified);
}

TEST(SqrtBound, DetectsViolation) {
  // Linear growth on the centre cannot satisfy a sqrt bound.
  LengthEvaluator linear("linear", Domain::heisenberg(), true, [](const Coords& g) {
    return LengthValue::exact(abs_int(g[0]) + abs_int(g[1]) + abs_int(g[2]));
  });
  const auto w = sqrt_bound_witness(linear, 100);
  EXPECT_FALSE(w.verified);
  ASSERT_TRUE(w.first_failure.has_value());
  EXPECT_EQ(*w.first_failure, 24);  // (n - 4)^2 > 16n first at n = 24
}

// ---- rational extension ----

TEST(ExtendRational, Examples) {
  const auto l1 = l1_length(2);
  EXPECT_EQ(extend_rational(l1, {Rational(3), Rational(-2)}).rational(), 5);
  EXPECT_EQ(extend_rational(l1, {Rational(1, 2), Rational(1, 3)}).rational(), Rational(5, 6));
  EXPECT_THROW(extend_rational(swl_length(), {Rational(1), Rational(1), Rational(1)}), PreconditionError);
}

TEST(ExtendRational, Homogeneous) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(-30, 30), den(1, 12);
  const auto l1 = l1_length(3);
  for (int i = 0; i < 200; ++i) {
    RationalVector q;
    for (int j = 0; j < 3; ++j) q.emplace_back(num(rng), den(rng));
    for (auto& c : q) c.canonicalize();
    Rational r(num(rng), den(rng));
    r.canonicalize();
    RationalVector rq = q;
    for (auto& c : rq) c *= r;
    EXPECT_EQ(extend_rational(l1, rq).rational(), abs(r) * extend_rational(l1, q).rational());
  }
}

// ---- eigenline seminorm ----

TEST(UnitEigenSeminorm, ConnerPositiveAndInvariant) {
  const auto l = unit_eigen_seminorm(kConnerMatrix);
  EXPECT_FALSE(l.exact());
  for (std::size_t i = 0; i < 4; ++i) {
    Coords e(4);
    e[i] = 1;
    EXPECT_GT(l(e).to_double(), 1e-6);
  }
  const auto chk = check_seminorm(l, kConnerMatrix, 100, 3);
  EXPECT_TRUE(chk.invariance_passed) << chk.max_invariance_error;
  EXPECT_TRUE(chk.positivity_passed) << chk.min_value;
  const auto proj = unit_eigen_projection(kConnerMatrix);
  EXPECT_NEAR(std::abs(proj.eigenvalue), 1.0, 1e-12);
  EXPECT_GE(proj.eigenvalue.imag(), 0.0);
}

TEST(UnitEigenSeminorm, IdentityIsEuclidean) {
  const auto l = unit_eigen_seminorm(IntMatrix::identity(2));
  EXPECT_NEAR(l(Coords{1, 0}).to_double(), 1.0, 1e-12);
  EXPECT_NEAR(l(Coords{3, 4}).to_double(), 5.0, 1e-12);
}

TEST(UnitEigenSeminorm, Errors) {
  EXPECT_THROW(unit_eigen_seminorm(IntMatrix{{2, 1}, {1, 1}}), PreconditionError);
  EXPECT_THROW(unit_eigen_seminorm(IntMatrix{{1, 1}, {0, 1}}), NumericalError);
}

TEST(UnitEigenSeminorm, RotationKillsNothing) {
  // Order-4 rotation: projection onto the i-eigenline, |pi v| = |v|/sqrt 2 after normalization.
  const auto l = unit_eigen_seminorm(IntMatrix{{0, -1}, {1, 0}});
  EXPECT_NEAR(l(Coords{1, 0}).to_double(), l(Coords{0, 1}).to_double(), 1e-12);
}

// ---- axiom checker ----

TEST(Axioms, SwlAndQuadraticPass) {
  for (const auto& l : {swl_length(), quadratic_length_evaluator()}) {
    const auto rep = check_axioms(l, {1000, 1e-9, 7});
    EXPECT_TRUE(rep.passed()) << l.name();
    EXPECT_EQ(rep.homogeneity.samples, 1000U);
    EXPECT_EQ(rep.commuting_subadditivity.skipped, 0U);
  }
}

TEST(Axioms, QuadraticSamplesHitItsSupport) {
  AxiomOptions opt;
  opt.samples = 200;
  std::size_t nonzero = 0;
  const auto q = quadratic_length_evaluator();
  detail::Sampler s(q.domain(), opt);
  for (int i = 0; i < 200; ++i) nonzero += q(s.element()).rational() != 0;
  EXPECT_GT(nonzero, 50U);
}

TEST(Axioms, WordLengthFailsHomogeneity) {
  const auto rep = check_axioms(word_length_evaluator(), {200, 1e-9, 7});
  EXPECT_FALSE(rep.homogeneity.passed);
  bool found = false;
  for (const auto& cx : rep.homogeneity.counterexamples)
    if (cx.inputs[0] == Coords{0, 0, 1} && cx.n == 2) {
      found = true;
      EXPECT_EQ(cx.lhs.rational(), 6);
      EXPECT_EQ(cx.rhs.rational(), 8);
    }
  EXPECT_TRUE(found);
}

TEST(Axioms, ConjugationCatchesNonClassFunction) {
  LengthEvaluator zabs("zabs", Domain::heisenberg(), true, [](const Coords& g) {
    return LengthValue::exact(abs_int(g[2]));
  });
  const auto rep = check_axioms(zabs, {300, 1e-9, 1});
  EXPECT_FALSE(rep.conjugation.passed);
  ASSERT_FALSE(rep.conjugation.counterexamples.empty());
  EXPECT_LE(rep.conjugation.counterexamples.size(), 5U);
  EXPECT_TRUE(std::is_sorted(rep.conjugation.counterexamples.begin(), rep.conjugation.counterexamples.end()));
}

TEST(Axioms, SeminormOnLattice) {
  const auto rep = check_axioms(unit_eigen_seminorm(kConnerMatrix), {300, 1e-9, 5});
  EXPECT_TRUE(rep.passed());
  EXPECT_FALSE(rep.exact);
}

TEST(Axioms, SdpDomain) {
  auto tw = make_twist(IntMatrix{{2, 1}, {1, 1}});
  LengthEvaluator t_abs("tabs", Domain::sdp(tw), true, [](const Coords& g) {
    return LengthValue::exact(abs_int(g.back()));
  });
  EXPECT_TRUE(check_axioms(t_abs, {300, 1e-9, 2}).passed());
}

TEST(Axioms, Deterministic) {
  const auto a = check_axioms(word_length_evaluator(), {100, 1e-9, 9});
  const auto b = check_axioms(word_length_evaluator(), {100, 1e-9, 9});
  ASSERT_EQ(a.homogeneity.counterexamples.size(), b.homogeneity.counterexamples.size());
  for (std::size_t i = 0; i < a.homogeneity.counterexamples.size(); ++i)
    EXPECT_EQ(a.homogeneity.counterexamples[i].inputs, b.homogeneity.counterexamples[i].inputs);
}

// ---- domination ----

TEST(Domination, WordLengthWithinBound) {
  std::vector<HeisElem> sample;
  for (int x = -2; x <= 2; ++x)
    for (int y = -2; y <= 2; ++y)
      for (int z = -2; z <= 2; ++z) sample.push_back({x, y, z});
  const auto rep = stable_norm_domination_check(word_length_evaluator(big_metric()), sample, 10, {200});
  EXPECT_TRUE(rep.precondition_passed);
  EXPECT_EQ(rep.k.rational(), 1);
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.rows.size(), sample.size() * 10);
}

TEST(Domination, QuadraticIsNotASemiNorm) {
  const auto rep = stable_norm_domination_check(quadratic_length_evaluator(), {HeisElem{1, 1, 0}}, 5);
  EXPECT_FALSE(rep.precondition_passed);
  EXPECT_EQ(rep.precondition_failure, "subadditivity");
  ASSERT_TRUE(rep.precondition_counterexample.has_value());
  EXPECT_EQ(rep.precondition_counterexample->lhs.rational(), 4);
  EXPECT_EQ(rep.precondition_counterexample->rhs.rational(), 1);
  EXPECT_FALSE(rep.passed());
}

TEST(Domination, ZeroHoldsTrivially) {
  const auto rep = stable_norm_domination_check(zero_length(Domain::heisenberg()), {HeisElem{3, -1, 2}}, 5);
  EXPECT_TRUE(rep.passed());
}
