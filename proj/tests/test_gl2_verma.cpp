#include <gtest/gtest.h>

#include "verma/checks.hpp"
#include "verma/gl2_verma.hpp"
#include "verma/text.hpp"

using namespace verma;

namespace {

// M(1, 1 + u^-1), both weights exact.
HighestWeightGL2 simple_weight() { return {SeriesU(), SeriesU::from_tail({Rat(1)}, true)}; }

ModuleVector mono(std::vector<unsigned> idx, Rat c = Rat(1)) { return ModuleVector(Monomial(std::move(idx)), c); }

HighestWeightGL2 generic_truncated_weight(std::size_t order) {
  std::vector<Rat> a, b;
  for (std::size_t r = 1; r <= order; ++r) {
    a.emplace_back(static_cast<long>(r * r % 7) - 3, static_cast<long>(r + 1));
    b.emplace_back(static_cast<long>(2 * r % 5) - 1, static_cast<long>(r * r + 1));
  }
  return {SeriesU::from_tail(a, false), SeriesU::from_tail(b, false)};
}

}  // namespace

TEST(Monomial, SortedInsertion) {
  Monomial m({3, 1, 2});
  EXPECT_EQ(m.indices(), (std::vector<unsigned>{1, 2, 3}));
  EXPECT_EQ(m.inserted(2).indices(), (std::vector<unsigned>{1, 2, 2, 3}));
  EXPECT_EQ(m.degree(), 6u);
  EXPECT_THROW(Monomial({0, 1}), invalid_input);
  EXPECT_EQ(monomials_of_level(2, 4).size(), 4u);  // 11 12 13 22
  EXPECT_EQ(monomials_with_bounded_indices(3, 2).size(), 4u);
}

TEST(ActGenerator, Examples) {
  auto hw = simple_weight();
  EXPECT_EQ(act_generator(2, 1, 2, mono({1}), hw), mono({1, 2}));
  EXPECT_EQ(act_generator(1, 1, 1, mono({1}), hw), mono({1}, Rat(-1)));
  EXPECT_EQ(act_generator(2, 2, 1, mono({1}), hw), mono({1}, Rat(2)));
  EXPECT_EQ(act_generator(1, 2, 1, mono({1}), hw), mono({}, Rat(-1)));
}

TEST(ActGenerator, HighestVector) {
  HighestWeightGL2 hw{SeriesU::from_tail({Rat(3), Rat(1, 2)}, true), SeriesU::from_tail({Rat(-1)}, true)};
  auto one = ModuleVector::highest();
  EXPECT_EQ(act_generator(1, 1, 2, one, hw), mono({}, Rat(1, 2)));
  EXPECT_EQ(act_generator(2, 2, 1, one, hw), mono({}, Rat(-1)));
  EXPECT_TRUE(act_generator(2, 2, 2, one, hw).is_zero());
  EXPECT_TRUE(act_generator(1, 2, 5, one, hw).is_zero());
}

TEST(ActGenerator, TruncationError) {
  HighestWeightGL2 hw{SeriesU::from_tail({Rat(1), Rat(2)}, false), SeriesU::from_tail({Rat(1), Rat(2)}, false)};
  EXPECT_NO_THROW(act_generator(1, 1, 2, ModuleVector::highest(), hw));
  EXPECT_THROW(act_generator(1, 1, 3, ModuleVector::highest(), hw), truncation_error);
  EXPECT_THROW(act_generator(1, 2, 3, mono({1}), hw), truncation_error);
  EXPECT_NO_THROW(act_generator(2, 1, 40, mono({1}), hw));
}

TEST(ActWord, Examples) {
  auto hw = simple_weight();
  auto one = ModuleVector::highest();
  EXPECT_EQ(act_word({}, mono({2, 3}), hw), mono({2, 3}));
  EXPECT_EQ(act_word({{Gen::t12, 1}, {Gen::t21, 1}}, one, hw), mono({}, Rat(-1)));
  EXPECT_EQ(act_word({{Gen::t21, 1}, {Gen::t21, 1}}, one, hw), mono({1, 1}));
}

TEST(QuantumDet, HighestVectorScalar) {
  HighestWeightGL2 hw{SeriesU::from_tail({Rat(2), Rat(-1), Rat(1, 3)}, true),
                      SeriesU::from_tail({Rat(1, 2), Rat(5)}, true)};
  // lambda1(u) lambda2(u-1), computed through the series layer.
  SeriesU expect = series_mul(hw.lambda1, series_shift_argument(hw.lambda2, Rat(-1), 8));
  for (unsigned r = 1; r <= 6; ++r)
    EXPECT_EQ(quantum_det_apply(r, ModuleVector::highest(), hw), mono({}, expect[r])) << r;
  EXPECT_EQ(quantum_det_apply(1, ModuleVector::highest(), simple_weight()), mono({}));
}

TEST(QuantumDet, CommutesWithLowering) {
  VermaModule mod(simple_weight());
  auto one = ModuleVector::highest();
  for (unsigned r = 1; r <= 3; ++r)
    for (unsigned s = 1; s <= 3; ++s) {
      ModuleVector c = quantum_det_apply(mod, r, mod.act(Gen::t21, s, one)) -
                       mod.act(Gen::t21, s, quantum_det_apply(mod, r, one));
      EXPECT_TRUE(c.is_zero()) << r << "," << s;
    }
}

TEST(SubmoduleK, Predicate) {
  EXPECT_TRUE(in_submodule_K(mono({2}), 1));
  EXPECT_FALSE(in_submodule_K(mono({1}), 1));
  EXPECT_TRUE(in_submodule_K(mono({1, 3}), 2));
  EXPECT_FALSE(in_submodule_K(mono({1, 3}) + mono({1}), 2));
  EXPECT_TRUE(in_submodule_K(ModuleVector(), 0));
  EXPECT_FALSE(in_submodule_K(ModuleVector::highest(), 0));
}

TEST(WeightOf, Examples) {
  auto hw = simple_weight();
  EXPECT_EQ(weight_of(ModuleVector::highest(), hw).eigenvalue(), Rat(-1));
  EXPECT_EQ(weight_of(mono({1}), hw).eigenvalue(), Rat(-3));
  auto w = weight_of(mono({1, 2}), hw);
  EXPECT_EQ(w.eigenvalue(), Rat(-5));
  EXPECT_EQ(w.level, 2u);
  EXPECT_THROW(weight_of(mono({1}) + mono({1, 1}), hw), invalid_input);
}

TEST(WeightOf, MatchesCartanAction) {
  HighestWeightGL2 hw{SeriesU::from_tail({Rat(3, 2)}, true), SeriesU::from_tail({Rat(-2), Rat(1)}, true)};
  VermaModule mod(hw);
  for (std::size_t k = 0; k <= 3; ++k)
    for (const Monomial& m : monomials_of_level(k, 6)) {
      ModuleVector v(m);
      ModuleVector hv = mod.act(Gen::t11, 1, v) - mod.act(Gen::t22, 1, v);
      EXPECT_EQ(hv, v * weight_of(v, hw).eigenvalue());
    }
}

TEST(Twist, Examples) {
  HighestWeightGL2 hw{SeriesU::from_tail({Rat(2)}, true), SeriesU::from_tail({Rat(1)}, true)};
  EXPECT_EQ(twist(hw, SeriesU()), hw);
  SeriesU phi = series_inverse(hw.lambda1, 6);
  auto t = twist(hw, phi);
  for (std::size_t r = 1; r <= 6; ++r) EXPECT_TRUE(t.lambda1[r].is_zero());
  SeriesU ratio = series_mul(hw.lambda2, phi);
  EXPECT_EQ(t.lambda2, ratio);
  // lambda1/lambda2 is unchanged.
  SeriesU any = SeriesU::from_tail({Rat(5), Rat(-1, 3)}, true);
  auto t2 = twist(hw, any);
  EXPECT_EQ(series_mul(t2.lambda1, series_inverse(t2.lambda2, 8)).truncated(8),
            series_mul(hw.lambda1, series_inverse(hw.lambda2, 8)).truncated(8));
}

TEST(CanonicalWeights, Examples) {
  auto a = canonical_polynomial_weights(parse_rational_fn("(u+2)/(u+1)"));
  EXPECT_EQ(a.lambda1, SeriesU::from_tail({Rat(2)}, true));
  EXPECT_EQ(a.lambda2, SeriesU::from_tail({Rat(1)}, true));
  auto b = canonical_polynomial_weights(parse_rational_fn("1"));
  EXPECT_TRUE(b.lambda1.is_one() && b.lambda2.is_one());
  auto c = canonical_polynomial_weights(parse_poly("u^2+3u+2"), parse_poly("u^2+u"));
  EXPECT_EQ(c.lambda1, SeriesU::from_tail({Rat(3), Rat(2)}, true));
  EXPECT_EQ(c.lambda2, SeriesU::from_tail({Rat(1)}, true));
  // Through RationalFn the common factor u+1 is cancelled first.
  auto d = canonical_polynomial_weights(parse_rational_fn("(u^2+3u+2)/(u^2+u)"));
  EXPECT_EQ(d.lambda1, SeriesU::from_tail({Rat(2)}, true));
  EXPECT_TRUE(d.lambda2.is_one());
}

// Weight additivity: t21 raises level, t12 lowers it, t11/t22 preserve it.
TEST(ActGenerator, LevelBehaviour) {
  VermaModule mod(canonical_polynomial_weights(parse_rational_fn("(u^2+3u+1)/(u^2+1)")));
  for (const Monomial& m : basis_up_to(3, 6)) {
    for (unsigned r = 1; r <= 4; ++r) {
      for (auto [g, delta] : {std::pair{Gen::t21, 1}, {Gen::t12, -1}, {Gen::t11, 0}, {Gen::t22, 0}}) {
        ModuleVector out = mod.act(g, r, m);
        for (auto lv : out.levels()) EXPECT_EQ(static_cast<long>(lv), static_cast<long>(m.level()) + delta);
      }
    }
  }
}

TEST(ActGenerator, LoweringOperatorsCommute) {
  VermaModule mod(simple_weight());
  for (const Monomial& m : basis_up_to(2, 4))
    for (unsigned r = 1; r <= 4; ++r)
      for (unsigned s = 1; s <= 4; ++s)
        EXPECT_EQ(mod.act(Gen::t21, r, mod.act(Gen::t21, s, m)), mod.act(Gen::t21, s, mod.act(Gen::t21, r, m)));
}

TEST(Relations, RttIdentitiesSmall) {
  VermaModule mod(canonical_polynomial_weights(parse_rational_fn("(u+2)/(u+1)")));
  auto rep = relation_suite(mod, 3, 2, 4);
  EXPECT_TRUE(rep.ok()) << rep.first_failure;
  VermaModule gen(generic_truncated_weight(12));
  auto rep2 = relation_suite(gen, 3, 2, 4);
  EXPECT_TRUE(rep2.ok()) << rep2.first_failure;
}

TEST(Relations, SignFlipIsDetected) {
  VermaModule mod(canonical_polynomial_weights(parse_rational_fn("(u+2)/(u+1)")), {.inject_sign_flip = true});
  EXPECT_FALSE(relation_suite(mod, 2, 1, 2).ok());
}

TEST(Relations, MemoizedAgreesWithDirect) {
  auto hw = generic_truncated_weight(14);
  VermaModule plain(hw), memo(hw, {.memoize = true});
  for (const Monomial& m : basis_up_to(3, 6))
    for (Gen g : all_generators())
      for (unsigned r = 1; r <= 4; ++r) EXPECT_EQ(plain.act(g, r, m), memo.act(g, r, m));
}

TEST(Centrality, SmallScale) {
  VermaModule mod(generic_truncated_weight(12));
  auto rep = centrality_suite(mod, 2, 2, 3);
  EXPECT_TRUE(rep.ok()) << rep.first_failure;
}

TEST(SubmoduleK, StableUnderGenerators) {
  auto mu = parse_rational_fn("(u+2)/(u+1)");
  VermaModule mod(canonical_polynomial_weights(mu));
  auto rep = k_stability_suite(mod, 1, 4, 3, 5);
  EXPECT_TRUE(rep.ok()) << rep.first_failure;
  EXPECT_GT(rep.checked, 0u);
}
