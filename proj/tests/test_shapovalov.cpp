#include <gtest/gtest.h>

#include "verma/sl2_gauss.hpp"
#include "verma/shapovalov.hpp"
#include "verma/text.hpp"

using namespace verma;

namespace {

std::vector<std::size_t> ranks(const std::vector<GramReport>& reps) {
  std::vector<std::size_t> out;
  for (const auto& r : reps) out.push_back(r.rank);
  return out;
}

std::vector<Integer> ints(std::initializer_list<long> xs) {
  std::vector<Integer> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST(Pairing, Examples) {
  HighestWeightGL2 hw{SeriesU(), SeriesU::from_tail({Rat(1)}, true)};
  EXPECT_EQ(contravariant_pairing(Monomial(), Monomial(), hw), Rat(1));
  EXPECT_EQ(contravariant_pairing(Monomial({1}), Monomial({1}), hw), Rat(-1));
  EXPECT_THROW(contravariant_pairing(Monomial({1}), Monomial(), hw), invalid_input);
}

TEST(Pairing, SymmetricAndAdjoint) {
  for (const char* s : {"(u+2)/(u+1)", "(u^2+3u+1)/(u^2+1)"}) {
    VermaModule mod(canonical_polynomial_weights(parse_rational_fn(s)), {.memoize = true});
    auto basis = basis_up_to(2, 4);
    for (const auto& a : basis)
      for (const auto& b : basis)
        if (a.level() == b.level())
          EXPECT_EQ(contravariant_pairing(a, b, mod), contravariant_pairing(b, a, mod)) << s;
    // <t12^(r) x, y> = <x, t21^(r) y> with x at level k+1 and y at level k.
    for (const auto& x : basis)
      for (const auto& y : basis) {
        if (x.level() != y.level() + 1) continue;
        for (unsigned r = 1; r <= 3; ++r) {
          Rat lhs(0);
          const ModuleVector raised = mod.act(Gen::t12, r, x);
          for (const auto& [m, c] : raised.terms()) lhs += c * contravariant_pairing(m, y, mod);
          EXPECT_EQ(lhs, contravariant_pairing(x, y.inserted(r), mod)) << s;
        }
      }
  }
}

TEST(GramRanks, Examples) {
  EXPECT_EQ(ranks(l_weight_dims(parse_rational_fn("(u+3)/(u+1)"), 3)), (std::vector<std::size_t>{1, 1, 1, 0}));
  EXPECT_EQ(ranks(l_weight_dims(parse_rational_fn("(u+1)/(u+2)"), 4)), (std::vector<std::size_t>{1, 1, 1, 1, 1}));
  auto triv = l_weight_dims(parse_rational_fn("1"), 2);
  EXPECT_EQ(ranks(triv), (std::vector<std::size_t>{1, 0, 0}));
  EXPECT_EQ(triv[1].spanning_size, 0u);
}

TEST(GramRanks, SpanningSizeBound) {
  auto reps = l_weight_dims(parse_rational_fn("(u^2+3u+1)/(u^2+1)"), 4);
  for (const auto& r : reps) {
    EXPECT_EQ(Integer(static_cast<unsigned long>(r.spanning_size)), binomial(2 + r.level - 1, r.level));
    EXPECT_LE(r.rank, r.spanning_size);
  }
  EXPECT_EQ(reps[0].rank, 1u);
}

TEST(GramRanks, WorkerCountDoesNotMatter) {
  auto mu = parse_rational_fn("(u+2)^2/(u+1)^2");
  EXPECT_EQ(ranks(l_weight_dims(mu, 4, 1)), ranks(l_weight_dims(mu, 4, 4)));
}

TEST(RationalRoots, SplitAndNonSplit) {
  EXPECT_EQ(rational_roots(parse_poly("(u+3)(u-1/2)u")), (std::vector<Rat>{Rat(-3), Rat(0), Rat(1, 2)}));
  EXPECT_EQ(rational_roots(parse_poly("(u+2)^2")), (std::vector<Rat>{Rat(-2), Rat(-2)}));
  EXPECT_TRUE(rational_roots(PolyQ(Rat(1))).empty());
  EXPECT_THROW(rational_roots(parse_poly("u^2+1")), unsupported_input);
}

TEST(ReorderStrings, Examples) {
  auto a = reorder_strings({Rat(3)}, {Rat(1)});
  EXPECT_EQ(a.l, 1u);
  auto b = reorder_strings({Rat(1)}, {Rat(2)});
  EXPECT_EQ(b.l, 0u);
  auto c = reorder_strings({Rat(2), Rat(5)}, {Rat(4), Rat(1)});
  EXPECT_EQ(c.l, 2u);
  EXPECT_EQ(c.pairs[0], std::make_pair(Rat(5), Rat(4)));
  EXPECT_EQ(c.pairs[1], std::make_pair(Rat(2), Rat(1)));
  auto d = reorder_strings({Rat(1, 2), Rat(4)}, {Rat(3), Rat(0)});
  EXPECT_EQ(d.l, 1u);
  EXPECT_EQ(d.pairs[0], std::make_pair(Rat(4), Rat(3)));
  EXPECT_THROW(reorder_strings({Rat(1)}, {}), invalid_input);
}

TEST(Character, Examples) {
  auto a = character_formula(parse_rational_fn("(u+3)/(u+1)"), 4);
  EXPECT_EQ(a.l, 1u);
  EXPECT_EQ(a.dims, ints({1, 1, 1, 0, 0}));
  auto b = character_formula(parse_rational_fn("(u+1)/(u+2)"), 4);
  EXPECT_EQ(b.l, 0u);
  EXPECT_EQ(b.dims, ints({1, 1, 1, 1, 1}));
  auto c = character_formula(parse_rational_fn("(u+2)^2/(u+1)^2"), 4);
  EXPECT_EQ(c.l, 2u);
  EXPECT_EQ(c.dims, ints({1, 2, 1, 0, 0}));
  EXPECT_EQ(character_formula(parse_rational_fn("1"), 2).dims, ints({1, 0, 0}));
  EXPECT_THROW(character_formula(parse_rational_fn("(u^2+2)/(u^2+1)"), 2), unsupported_input);
}

// Finite case: the dimensions add up to prod (alpha_i - beta_i + 1).
TEST(Character, FiniteTotal) {
  for (const char* s : {"(u+3)/(u+1)", "(u+2)^2/(u+1)^2", "(u+4)(u+1/2)/((u+1)(u-1/2))", "(u+5)(u+2)/((u+4)(u+1))"}) {
    auto ch = character_formula(parse_rational_fn(s), 12);
    Integer total = 0, expect = 1;
    for (const auto& d : ch.dims) total += d;
    for (std::size_t i = 0; i < ch.alphas.size(); ++i) {
      ASSERT_LT(i, ch.l) << s;
      expect *= (ch.alphas[i] - ch.betas[i] + Rat(1)).numerator();
    }
    EXPECT_EQ(total, expect) << s;
  }
}

TEST(Character, AgreesWithGramRanks) {
  for (const char* s : {"(u+3)/(u+1)", "(u+1)/(u+2)", "(u+2)^2/(u+1)^2", "(u+5)(u+2)/((u+4)(u+1))",
                        "(u+3)(u+1/3)/((u+1)(u+2/3))"}) {
    auto mu = parse_rational_fn(s);
    auto ch = character_formula(mu, 4);
    auto g = l_weight_dims(mu, 4);
    for (std::size_t k = 0; k <= 4; ++k)
      EXPECT_EQ(Integer(static_cast<unsigned long>(g[k].rank)), ch.dims[k]) << s << " level " << k;
  }
}
