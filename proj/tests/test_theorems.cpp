#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "support/oracles.hpp"
#include "turanlab/edge_list.hpp"
#include "turanlab/graph.hpp"
#include "turanlab/rng.hpp"
#include "turanlab/serialize.hpp"
#include "turanlab/theorems.hpp"

using namespace turanlab;

namespace {

TheoremParams params(std::size_t r) {
  TheoremParams p;
  p.r = r;
  return p;
}

void expect_valid(const Graph& g, const TheoremVerdict& v) {
  const auto err = validate_certificate(g, v);
  EXPECT_FALSE(err) << theorem_name(v.theorem) << ": " << err.value_or("");
}

}  // namespace

TEST(Names, RoundTrip) {
  for (const auto& [id, name] : kTheoremNames) {
    EXPECT_EQ(parse_theorem(name), id);
    EXPECT_EQ(theorem_name(id), name);
  }
  EXPECT_FALSE(parse_theorem("t9"));
}

TEST(SpectralTuran, Examples) {
  const Graph plus = make_turan(6, 2).with_edge(0, 1);
  const auto v = check_spectral_turan(plus, 2);
  EXPECT_EQ(v.hypothesis, Tri::Yes);
  EXPECT_EQ(v.conclusion, Tri::Yes);
  ASSERT_TRUE(std::holds_alternative<CliqueCertificate>(v.certificate));
  EXPECT_EQ(std::get<CliqueCertificate>(v.certificate).vertices.size(), 3u);
  expect_valid(plus, v);

  EXPECT_EQ(check_spectral_turan(make_turan(6, 2), 2).hypothesis, Tri::No);

  const auto k4 = check_spectral_turan(make_complete(4), 3);
  EXPECT_EQ(k4.hypothesis, Tri::Yes);
  EXPECT_EQ(k4.conclusion, Tri::Yes);
  expect_valid(make_complete(4), k4);

  EXPECT_THROW(check_spectral_turan(make_complete(4), 1), std::invalid_argument);
}

TEST(Theorem1, Examples) {
  const Graph t = make_turan(40, 2).with_edge(0, 1);
  const auto v = check_theorem1(t, 2);
  EXPECT_EQ(v.hypothesis, Tri::Yes);
  EXPECT_EQ(v.conclusion, Tri::Yes);
  EXPECT_FALSE(v.in_regime);
  EXPECT_EQ(*v.lhs, Rational(20));
  EXPECT_EQ(*v.rhs, Rational(40, 256));
  EXPECT_EQ(oracle::joint(t, 3).size, 20u);
  expect_valid(t, v);

  const auto no = check_theorem1(make_turan(6, 2), 2);
  EXPECT_EQ(no.hypothesis, Tri::No);
  EXPECT_FALSE(no.is_counterexample());

  const auto k5 = check_theorem1(make_complete(5), 2);
  EXPECT_EQ(k5.hypothesis, Tri::Yes);
  EXPECT_EQ(*k5.lhs, Rational(3));
  EXPECT_EQ(*k5.rhs, Rational(5, 256));
  EXPECT_EQ(k5.conclusion, Tri::Yes);
}

TEST(Theorem2, OutOfRegimeEmbedding) {
  const Graph g = make_turan(60, 3).with_edge(0, 1);
  TheoremParams p = params(3);
  p.c = 0.5;  // floor(0.5 ln 60) = 2, ceil(60^{1-sqrt 0.5}) = 4
  const auto v = check_theorem2(g, p);
  EXPECT_EQ(v.hypothesis, Tri::Yes);
  EXPECT_EQ(v.conclusion, Tri::Yes);
  EXPECT_FALSE(v.in_regime);
  ASSERT_TRUE(v.target);
  EXPECT_EQ(v.target->sizes(), (std::vector<std::size_t>{2, 2, 4}));
  expect_valid(g, v);
}

TEST(Theorem2, RegimeIsEmptyAtDeskScale) {
  const auto v = check_theorem2(make_turan(100, 2).with_edge(0, 1), params(2));
  EXPECT_FALSE(v.in_regime);
  EXPECT_EQ(check_theorem2(make_turan(12, 3), params(3)).hypothesis, Tri::No);
}

TEST(Theorem2, ClampAndVacuity) {
  TheoremParams p = params(2);
  p.c = 0.3;  // floor(0.3 ln 20) = 0
  const auto v = check_theorem2(make_turan(20, 2).with_edge(0, 1), p);
  EXPECT_TRUE(v.vacuous);
  EXPECT_EQ(v.conclusion, Tri::Yes);
  p.c = 0.4;  // floor(0.4 ln 20) = 1, first part clamped to 2
  const auto w = check_theorem2(make_turan(20, 2).with_edge(0, 1), p);
  EXPECT_FALSE(w.vacuous);
  ASSERT_TRUE(w.target);
  EXPECT_EQ((*w.target)[0], 2u);
  EXPECT_EQ(w.conclusion, Tri::Yes);
}

TEST(Theorem3, Examples) {
  const auto v = check_theorem3(make_turan(20, 2).with_edge(0, 1), 2, kDefaultBudget, 0.7);
  EXPECT_EQ(v.conclusion, Tri::Yes);
  EXPECT_EQ(v.target->sizes(), (std::vector<std::size_t>{2, 2}));
  EXPECT_FALSE(v.in_regime);
  expect_valid(make_turan(20, 2).with_edge(0, 1), v);

  EXPECT_FALSE(check_theorem3(make_complete(30), 2).in_regime);
  const auto none = check_theorem3(make_turan(10, 2), 2);
  EXPECT_EQ(none.hypothesis, Tri::No);
  EXPECT_FALSE(none.is_counterexample());
}

TEST(Theorem2, BudgetMakesConclusionInconclusive) {
  TheoremParams p = params(3);
  p.c = 0.9;  // floor(0.9 ln 30) = 3
  p.budget = 1;
  const auto v = check_theorem2(make_turan(30, 3), p);
  EXPECT_EQ(v.conclusion, Tri::Inconclusive);
}

TEST(Stability, Examples) {
  TheoremParams p = params(2);
  p.b = 0.001;
  const Graph t = make_turan(20, 2);
  const auto v = check_stability(t, p, TheoremId::T1_2);
  EXPECT_EQ(v.hypothesis, Tri::Yes);
  EXPECT_EQ(v.conclusion, Tri::Yes);
  EXPECT_EQ(v.branch, 'b');
  ASSERT_TRUE(std::holds_alternative<StabilityWitness>(v.certificate));
  EXPECT_EQ(std::get<StabilityWitness>(v.certificate).subset.size(), 20u);
  expect_valid(t, v);

  const Graph plus = t.with_edge(0, 1);
  const auto a = check_stability(plus, p, TheoremId::T1_2);
  EXPECT_EQ(a.hypothesis, Tri::Yes);
  EXPECT_EQ(a.branch, 'a');
  EXPECT_EQ(*a.lhs, Rational(10));
  EXPECT_EQ(*a.rhs, Rational(20, 512));
  expect_valid(plus, a);

  EXPECT_EQ(check_stability(Graph(8), p, TheoremId::T1_2).hypothesis, Tri::No);
}

TEST(Stability, CompleteGraphUsesJoints) {
  TheoremParams p = params(2);
  p.b = 1e-6;
  const auto v = check_stability(make_complete(5), p, TheoremId::T1_2);
  EXPECT_EQ(v.hypothesis, Tri::Yes);
  EXPECT_EQ(v.witness_status, WitnessStatus::NotFound);
  EXPECT_EQ(v.branch, 'a');
  EXPECT_EQ(*v.lhs, Rational(oracle::joint(make_complete(5), 3).size));
}

TEST(Stability, OtherVariantsAndRegime) {
  TheoremParams p = params(3);
  const Graph g = make_turan(30, 3).with_edge(0, 1);
  for (TheoremId id : {TheoremId::T2_2, TheoremId::T3_2}) {
    const auto v = check_stability(g, p, id);
    EXPECT_EQ(v.hypothesis, Tri::Yes);
    EXPECT_EQ(v.conclusion, Tri::Yes);
    EXPECT_FALSE(v.in_regime);
    expect_valid(g, v);
  }
  p.b = 1.0;
  EXPECT_FALSE(check_stability(g, p, TheoremId::T1_2).in_regime);
  EXPECT_THROW(check_stability(g, p, TheoremId::T1), std::invalid_argument);
}

TEST(Lensmm, Examples) {
  const auto k3 = check_fact_lenslmm(make_complete(3), 2);
  EXPECT_EQ(k3.conclusion, Tri::Yes);
  EXPECT_EQ(*k3.lhs, Rational(3));
  // rhs at mu = 2 is (2/3 - 1/2)(2/3)(3/2)^3 = 3/8
  EXPECT_NEAR(to_double(*k3.rhs), 0.375, 1e-8);

  EXPECT_EQ(check_fact_lenslmm(Graph(4), 2).conclusion, Tri::Yes);
  const auto k5 = check_fact_lenslmm(make_complete(5), 4);
  EXPECT_EQ(k5.conclusion, Tri::Yes);
  EXPECT_EQ(*k5.lhs, Rational(5));
  EXPECT_NEAR(to_double(*k5.rhs), (0.8 - 0.75) * 2.4 * std::pow(1.25, 5), 1e-8);
}

TEST(Tsize, Examples) {
  const auto v = check_fact_tsize(7, 3);
  EXPECT_EQ(v.conclusion, Tri::Yes);
  EXPECT_EQ(*v.lhs, Rational(32));
  EXPECT_EQ(*v.rhs, Rational(383, 12));
  const auto w = check_fact_tsize(6, 2);
  EXPECT_EQ(*w.lhs, Rational(18));
  EXPECT_EQ(*w.rhs, Rational(35, 2));
  for (std::size_t r = 2; r <= 9; ++r) EXPECT_EQ(check_fact_tsize(r, r).conclusion, Tri::Yes);
}

TEST(Lekd, Examples) {
  const Graph g = make_turan(32, 2).with_edge(0, 1);
  const auto v = check_fact_lekd(g, 2);
  EXPECT_EQ(v.hypothesis, Tri::Yes);
  EXPECT_EQ(*v.lhs, Rational(16));
  EXPECT_EQ(*v.rhs, Rational(1));
  EXPECT_EQ(v.conclusion, Tri::Yes);
  expect_valid(g, v);
  EXPECT_EQ(check_fact_lekd(make_turan(32, 2), 2).hypothesis, Tri::No);
  EXPECT_EQ(check_fact_lekd(make_star(10), 2).hypothesis, Tri::No);
}

TEST(Thv4, Examples) {
  const Graph g = make_turan(32, 2).with_edge(0, 1);
  const auto v = check_fact_thv4(g, 2, 0.6);  // floor(0.6 ln 32) = 2
  EXPECT_EQ(v.hypothesis, Tri::Yes);
  EXPECT_EQ(v.conclusion, Tri::Yes);
  ASSERT_TRUE(v.target);
  EXPECT_EQ((*v.target)[0], 2u);
  expect_valid(g, v);
  EXPECT_EQ(check_fact_thv4(make_turan(16, 2), 2, 0.6).hypothesis, Tri::No);
  EXPECT_FALSE(check_fact_thv4(g, 2, std::nullopt).in_regime);
}

TEST(Tstab, ReadingsAndHypothesis) {
  TheoremParams p = params(2);
  p.b = 1e-6;
  const Graph t = make_turan(20, 2);
  const auto v = check(TheoremId::FactTstab, t, p);
  EXPECT_EQ(v.hypothesis, Tri::Yes);
  EXPECT_EQ(v.conclusion, Tri::Yes);
  expect_valid(t, v);
  EXPECT_EQ(check(TheoremId::FactTstab, t.with_edge(0, 1), p).hypothesis, Tri::No);

  p.tstab_reading = TstabReading::UseC;
  EXPECT_THROW(check(TheoremId::FactTstab, t, p), std::invalid_argument);
  p.c = 1e-3;
  const auto c = check(TheoremId::FactTstab, t, p);
  EXPECT_EQ(c.conclusion, Tri::Yes);
  expect_valid(t, c);
}

TEST(EdgeSpectral, Examples) {
  const auto v = check_edge_implies_spectral(make_turan(6, 2).with_edge(0, 1), 2);
  EXPECT_EQ(v.hypothesis, Tri::Yes);
  EXPECT_EQ(v.conclusion, Tri::Yes);
  EXPECT_EQ(check_edge_implies_spectral(make_turan(6, 2), 2).hypothesis, Tri::No);
}

TEST(BookRemark, Examples) {
  const Graph g = make_turan(6, 2).with_edge(0, 1);
  const auto v = check(TheoremId::BookRemark, g, params(2));
  EXPECT_EQ(v.hypothesis, Tri::Yes);
  EXPECT_EQ(v.conclusion, Tri::Yes);
  EXPECT_EQ(*v.lhs, Rational(static_cast<long long>(oracle::book(g, 2).size)));
  expect_valid(g, v);
}

TEST(Certificates, AllYesCertificatesValidateOnRandomGraphs) {
  SplitMix64 rng(404);
  for (int t = 0; t < 120; ++t) {
    const std::size_t n = 5 + rng.below(10);
    const Graph g = random_gnm(n, n * (n - 1) / 4 + rng.below(n * (n - 1) / 4 + 1), rng());
    for (std::size_t r = 2; r <= 3; ++r) {
      TheoremParams p = params(r);
      p.c = 0.8;
      p.b = 1e-3;
      GraphFacts facts(g);
      for (const auto& [id, name] : kTheoremNames) {
        const auto v = check(id, facts, p);
        if (!std::holds_alternative<std::monostate>(v.certificate)) {
          EXPECT_EQ(v.conclusion, Tri::Yes) << name;
        }
        expect_valid(g, v);
        // c = 0.8 is far outside the admissible range of the density
        // statements, so only the parameter-free ones must hold here
        const bool uses_c = id == TheoremId::T2 || id == TheoremId::T3 || id == TheoremId::T2_2 ||
                            id == TheoremId::T3_2 || id == TheoremId::FactThv4 || id == TheoremId::BookRemark;
        if (!uses_c) {
          EXPECT_FALSE(v.is_counterexample()) << name << " " << to_edge_list(g);
        }
      }
    }
  }
}

TEST(Certificates, TamperedCertificatesAreRejected) {
  const Graph g = make_turan(6, 2).with_edge(0, 1);
  auto v = check_theorem1(g, 2);
  ASSERT_TRUE(std::holds_alternative<JointReport>(v.certificate));
  std::get<JointReport>(v.certificate).size += 1;
  EXPECT_TRUE(validate_certificate(g, v));

  auto k = check_spectral_turan(g, 2);
  std::get<CliqueCertificate>(k.certificate).vertices = {0, 1, 2};
  EXPECT_TRUE(validate_certificate(g, k));
}

TEST(Serialize, VerdictJson) {
  const Graph g = make_turan(6, 2).with_edge(0, 1);
  const auto v = check_theorem1(g, 2);
  const Json j = to_json(v, &g);
  EXPECT_EQ(j["theorem"], "t1");
  EXPECT_EQ(j["hypothesis"], "yes");
  EXPECT_EQ(j["conclusion"], "yes");
  EXPECT_EQ(j["lhs"], "3");
  EXPECT_EQ(j["rhs"], "3/128");
  EXPECT_EQ(j["certificate"]["kind"], "joint");
  EXPECT_FALSE(j.contains("graph"));
  EXPECT_TRUE(to_json(v, &g, true).contains("graph"));

  TheoremVerdict fake = v;
  fake.conclusion = Tri::No;
  fake.certificate = std::monostate{};
  const Json cx = to_json(fake, &g);
  EXPECT_EQ(cx["counterexample"], true);
  EXPECT_EQ(cx["graph"]["m"], 10);
}
