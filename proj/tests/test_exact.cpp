#include <gtest/gtest.h>

#include <random>

#include "verma/exact.hpp"
#include "verma/text.hpp"

using namespace verma;

namespace {

SeriesU series(std::initializer_list<long> tail, bool exact) {
  std::vector<Rat> t;
  for (long x : tail) t.emplace_back(x);
  return SeriesU::from_tail(t, exact);
}

std::vector<Rat> coeffs_through(const SeriesU& s, std::size_t n) {
  std::vector<Rat> out;
  for (std::size_t r = 0; r <= n; ++r) out.push_back(s[r]);
  return out;
}

std::vector<Rat> rats(std::initializer_list<long> xs) {
  std::vector<Rat> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

Rat random_rat(std::mt19937_64& rng, long height) {
  long num = static_cast<long>(rng() % (2 * height + 1)) - height;
  long den = static_cast<long>(rng() % height) + 1;
  return Rat(num, den);
}

SeriesU random_series(std::mt19937_64& rng, std::size_t order) {
  std::vector<Rat> tail;
  for (std::size_t i = 0; i < order; ++i) tail.push_back(random_rat(rng, 9));
  return SeriesU::from_tail(tail, false);
}

}  // namespace

TEST(Rat, CanonicalForm) {
  Rat a(6, -4);
  EXPECT_EQ(a.numerator(), -3);
  EXPECT_EQ(a.denominator(), 2);
  EXPECT_EQ(Rat(0, 7).denominator(), 1);
  EXPECT_EQ(Rat::parse("-10/4"), Rat(-5, 2));
  EXPECT_EQ(Rat::parse("7").str(), "7");
  EXPECT_THROW(Rat::parse("1/0"), invalid_input);
  EXPECT_THROW(Rat::parse("1/-2"), invalid_input);
  EXPECT_THROW(Rat::parse("x"), invalid_input);
}

TEST(SeriesU, MulExamples) {
  SeriesU a = series({1}, true);
  SeriesU b = series({-1}, true);
  EXPECT_EQ(series_mul(a, b), series({0, -1}, true));
  EXPECT_EQ(series_mul(a, SeriesU()), a);
  EXPECT_EQ(series_mul(a, a), series({2, 1}, true));
}

TEST(SeriesU, MulOrderPropagation) {
  SeriesU t = series({1, 2, 3}, false);
  SeriesU e = series({5}, true);
  EXPECT_EQ(series_mul(t, e).order(), 3u);
  EXPECT_FALSE(series_mul(t, e).exact());
  EXPECT_EQ(series_mul(t, series({1, 1, 1, 1, 1}, false)).order(), 3u);
  EXPECT_THROW(series_mul(t, e)[4], truncation_error);
}

TEST(SeriesU, InverseExamples) {
  SeriesU inv = series_inverse(series({1}, true), 5);
  EXPECT_EQ(coeffs_through(inv, 5), rats({1, -1, 1, -1, 1, -1}));
  EXPECT_EQ(series_inverse(SeriesU()), SeriesU());
  SeriesU inv2 = series_inverse(series({-2}, true), 4);
  EXPECT_EQ(coeffs_through(inv2, 4), rats({1, 2, 4, 8, 16}));
  EXPECT_THROW(series_inverse(series({-2}, true)), invalid_input);
}

TEST(SeriesU, ShiftExamples) {
  SeriesU s = series_shift_argument(series({1}, true), Rat(-1), 4);
  EXPECT_EQ(coeffs_through(s, 4), rats({1, 1, 1, 1, 1}));
  SeriesU a = series({3, -2}, false);
  EXPECT_EQ(series_shift_argument(a, Rat(0)), a);
  // 1 + (u-1)^-2 = 1 + u^-2 (1 - u^-1)^-2
  SeriesU s2 = series_shift_argument(series({0, 1}, true), Rat(-1), 5);
  EXPECT_EQ(coeffs_through(s2, 5), rats({1, 0, 1, 2, 3, 4}));
}

TEST(SeriesU, TruncationIsDistinctError) {
  SeriesU t = series({1, 1}, false);
  EXPECT_EQ(t[2], Rat(1));
  EXPECT_THROW(t[3], truncation_error);
  EXPECT_EQ(series({1, 1}, true)[7], Rat(0));
}

TEST(RationalFn, ExpandExamples) {
  auto f = parse_rational_fn("(u+2)/(u+1)");
  EXPECT_EQ(coeffs_through(expand_rational(f, 4), 4), rats({1, 1, -1, 1, -1}));
  EXPECT_FALSE(expand_rational(f, 4).exact());
  EXPECT_EQ(expand_rational(parse_rational_fn("u/u"), 3), SeriesU());
  EXPECT_TRUE(expand_rational(parse_rational_fn("u/u"), 3).exact());
  auto g = parse_rational_fn("(u+3)/(u+1)");
  EXPECT_EQ(coeffs_through(expand_rational(g, 3), 3), rats({1, 2, -2, 2}));
}

TEST(RationalFn, ReductionAndValidation) {
  auto f = parse_rational_fn("(u^2+3u+2)/(u^2+u)");
  EXPECT_EQ(format_rational_fn(f), "(u+2)/(u)");
  EXPECT_EQ(f.degree(), 1u);
  EXPECT_EQ(format_rational_fn(parse_rational_fn("(2u+4)/(2u+2)")), "(u+2)/(u+1)");
  EXPECT_THROW(parse_rational_fn("(u+2)/(u^2+1)"), invalid_input);
  EXPECT_THROW(parse_rational_fn("(2u+1)/(u+1)"), invalid_input);
  EXPECT_THROW(parse_rational_fn("(u+2)/(u+1"), invalid_input);
}

TEST(Text, ParserForms) {
  EXPECT_EQ(format_rational_fn(parse_rational_fn("(u+2)^2/(u+1)^2")), "(u^2+4u+4)/(u^2+2u+1)");
  EXPECT_EQ(format_rational_fn(parse_rational_fn("(u+3/2)/(u-1/2)")), "(u+3/2)/(u-1/2)");
  EXPECT_EQ(format_poly(parse_poly("(3/2)u^2 - u + 1/3")), "(3/2)u^2-u+1/3");
  EXPECT_EQ(parse_poly(format_poly(parse_poly("(3/2)u^2 - u + 1/3"))), parse_poly("(3/2)u^2-u+1/3"));
  EXPECT_EQ(format_rational_fn(parse_rational_fn("1/1")), "1");
  EXPECT_EQ(parse_rat_list("1, -1, 1/2"), (std::vector<Rat>{Rat(1), Rat(-1), Rat(1, 2)}));
  EXPECT_EQ(format_series(series({1, -1}, false)), "1 + 1*u^-1 - 1*u^-2 + ...");
}

TEST(PolyQ, GcdAndShift) {
  PolyQ a = parse_poly("(u+1)(u+2)(u-3)");
  PolyQ b = parse_poly("(u+2)(u-3)(u+7)");
  EXPECT_EQ(PolyQ::gcd(a, b), parse_poly("(u+2)(u-3)"));
  EXPECT_EQ(parse_poly("u^2+1").shifted(Rat(1)), parse_poly("u^2+2u+2"));
  EXPECT_EQ(parse_poly("u+1")(Rat(-1)), Rat(0));
}

// Invariant: a * inverse(a) = 1 through the retained order.
TEST(SeriesProperty, InverseRoundTrip) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t order = 1 + rng() % 12;
    SeriesU a = random_series(rng, order);
    SeriesU prod = series_mul(a, series_inverse(a));
    EXPECT_EQ(prod.order(), order);
    for (std::size_t r = 1; r <= order; ++r) EXPECT_TRUE(prod[r].is_zero()) << "r=" << r;
  }
}

// Invariant: expand(f, n) truncated to m equals expand(f, m).
TEST(SeriesProperty, ExpansionPrefixStable) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t deg = 1 + rng() % 3;
    std::vector<Rat> p(deg + 1), q(deg + 1);
    for (std::size_t i = 0; i < deg; ++i) {
      p[i] = random_rat(rng, 9);
      q[i] = random_rat(rng, 9);
    }
    p[deg] = q[deg] = Rat(1);
    if (PolyQ(p) == PolyQ(q)) continue;
    RationalFn f{PolyQ(p), PolyQ(q)};
    SeriesU big = expand_rational(f, 10);
    for (std::size_t m = 0; m < 10; ++m) EXPECT_EQ(big.truncated(m), expand_rational(f, m));
  }
}

// Invariant: shifting by c then by -c is the identity through the retained order.
TEST(SeriesProperty, ShiftInverse) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    SeriesU a = random_series(rng, 1 + rng() % 10);
    Rat c = random_rat(rng, 5);
    SeriesU back = series_shift_argument(series_shift_argument(a, c), -c);
    EXPECT_EQ(back, a);
  }
}

TEST(PolyProperty, RingAxioms) {
  std::mt19937_64 rng(17);
  auto rand_poly = [&] {
    std::vector<Rat> c(rng() % 5);
    for (auto& x : c) x = random_rat(rng, 9);
    return PolyQ(c);
  };
  for (int trial = 0; trial < 50; ++trial) {
    PolyQ a = rand_poly(), b = rand_poly(), c = rand_poly();
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * b, b * a);
    if (!b.is_zero()) {
      auto [q, r] = PolyQ::divmod(a, b);
      EXPECT_EQ(q * b + r, a);
      EXPECT_LT(r.degree(), b.degree());
    }
  }
}
