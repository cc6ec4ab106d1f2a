#include <gtest/gtest.h>

#include "eigconf/bkr.hpp"
#include "eigconf/errors.hpp"
#include "test_support.hpp"

namespace eigconf {
namespace {

using testing::q;

DenseMatrix M(std::vector<std::vector<long>> rows) {
  std::vector<std::vector<Rational>> r;
  for (const auto& row : rows) {
    r.emplace_back();
    for (long x : row) r.back().emplace_back(x);
  }
  return DenseMatrix::from_rows(r);
}

const char* kWorkedSignMatrix =
    "-+-\n"
    "+0-\n"
    "-+-\n"
    "-++\n"
    "+-0\n"
    "--+\n"
    "-+-\n"
    "+--\n"
    "-+-\n";

/// H[e][s] = prod_k s_k^{e_k}, 0^0 = 1, straight from the definition.
DenseMatrix H_by_definition(int m) {
  std::size_t size = pow3(m);
  DenseMatrix h(size, size);
  for (std::size_t e = 0; e < size; ++e)
    for (std::size_t s = 0; s < size; ++s) {
      auto ed = ExponentIndex::from_rank(e, m).digits;
      auto sv = SignVectorIndex::from_rank(s, m).signs;
      long prod = 1;
      for (int k = 0; k < m; ++k) {
        long base = static_cast<int>(sv[static_cast<std::size_t>(k)]);
        for (int p = 0; p < ed[static_cast<std::size_t>(k)]; ++p) prod *= base;
      }
      h(e, s) = prod;
    }
  return h;
}

TEST(Indexing, ExponentRanks) {
  EXPECT_EQ(ExponentIndex::from_rank(0, 2).to_string(), "00");
  EXPECT_EQ(ExponentIndex::from_rank(1, 2).to_string(), "01");
  EXPECT_EQ(ExponentIndex::from_rank(3, 2).to_string(), "10");
  EXPECT_EQ(ExponentIndex::from_rank(8, 2).to_string(), "22");
  for (std::size_t r = 0; r < 27; ++r) EXPECT_EQ(ExponentIndex::from_rank(r, 3).rank(), r);
}

TEST(Indexing, SignVectorRanks) {
  const char* order[] = {"--", "-0", "-+", "0-", "00", "0+", "+-", "+0", "++"};
  for (std::size_t r = 0; r < 9; ++r) {
    EXPECT_EQ(SignVectorIndex::from_rank(r, 2).to_string(), order[r]);
    EXPECT_EQ(SignVectorIndex::from_rank(r, 2).rank(), r);
  }
}

TEST(BuildH, SingleFactor) { EXPECT_EQ(build_H(1), M({{1, 1, 1}, {-1, 0, 1}, {1, 0, 1}})); }

TEST(BuildH, WorkedExampleNineByNine) {
  DenseMatrix expected = M({
      {1, 1, 1, 1, 1, 1, 1, 1, 1},
      {-1, 0, 1, -1, 0, 1, -1, 0, 1},
      {1, 0, 1, 1, 0, 1, 1, 0, 1},
      {-1, -1, -1, 0, 0, 0, 1, 1, 1},
      {1, 0, -1, 0, 0, 0, -1, 0, 1},
      {-1, 0, -1, 0, 0, 0, 1, 0, 1},
      {1, 1, 1, 0, 0, 0, 1, 1, 1},
      {-1, 0, 1, 0, 0, 0, -1, 0, 1},
      {1, 0, 1, 0, 0, 0, 1, 0, 1},
  });
  EXPECT_EQ(build_H(2), expected);
}

TEST(BuildH, ProductFormulaUpToFour) {
  for (int m = 1; m <= 4; ++m) EXPECT_EQ(build_H(m), H_by_definition(m)) << "m=" << m;
}

TEST(BuildH, InverseUpToSix) {
  for (int m = 1; m <= 6; ++m) {
    EXPECT_EQ(build_H(m) * build_H_inverse(m), DenseMatrix::identity(pow3(m))) << "m=" << m;
  }
  EXPECT_EQ(build_H_inverse(2), invert(build_H(2)));
}

TEST(BuildV, Examples) {
  EXPECT_EQ(build_V(1), M({{0, 1, 1}}));
  EXPECT_EQ(build_V(2), M({{1, 1, 1, 1, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 1, 0, 1, 1}}));
}

TEST(Sigma, WorkedExample) {
  SignMatrix s = SignMatrix::parse(kWorkedSignMatrix, 2, 3);
  SigmaVector sigma = sigma_from_sign_matrix(s);
  EXPECT_EQ(sigma[0], 3);
  EXPECT_EQ(sigma[1], 1);
  EXPECT_EQ(sigma, (SigmaVector{3, 1, 3, -1, 1, -1, 3, 1, 3}));
}

TEST(Tau, WorkedExample) {
  SignMatrix s = SignMatrix::parse(kWorkedSignMatrix, 2, 3);
  TransformResult r = transform(s);
  EXPECT_EQ(r.q, (std::vector<int>{1, 0, 1, 0, 0, 0, 0, 0, 1}));
  EXPECT_EQ(r.config, (EigenConfig{{2, 1}}));
  EXPECT_EQ(tau(s), (EigenConfig{{2, 1}}));
}

TEST(Tau, SmallCases) {
  TransformResult a = transform(SignMatrix::parse("-\n-\n-\n", 1, 1));
  EXPECT_EQ(a.sigma, (SigmaVector{1, 1, 1}));
  EXPECT_EQ(a.q, (std::vector<int>{0, 0, 1}));
  EXPECT_EQ(a.config, (EigenConfig{{1}}));

  TransformResult b = transform(SignMatrix::parse("-\n+\n-\n", 1, 1));
  EXPECT_EQ(b.sigma, (SigmaVector{1, -1, 1}));
  EXPECT_EQ(b.q, (std::vector<int>{1, 0, 0}));
  EXPECT_EQ(b.config, (EigenConfig{{0}}));
}

TEST(Tau, InfeasibleIsReported) {
  SignMatrix s = SignMatrix::parse("+\n+\n+\n", 1, 1);
  try {
    tau(s);
    FAIL() << "expected InfeasibleSignMatrix";
  } catch (const InfeasibleSignMatrix& e) {
    EXPECT_EQ(e.q(), (std::vector<Rational>{q(0), q(0), q(-1)}));
  }
}

TEST(SignMatrixText, ParseAndRoundTrip) {
  SignMatrix s = SignMatrix::parse(kWorkedSignMatrix, 2, 3);
  EXPECT_EQ(s.to_text(), kWorkedSignMatrix);
  EXPECT_EQ(SignMatrix::parse("-+-\r\n+0-\r\n-+-\r\n-++\n+-0\n--+\n-+-\n+--\n-+-\n\n\n", 2, 3), s);
}

TEST(SignMatrixText, ParseErrors) {
  EXPECT_THROW(SignMatrix::parse("-+\n-+\n-+\n", 1, 3), ParseError);   // short rows
  EXPECT_THROW(SignMatrix::parse("-\n-\n", 1, 1), ParseError);         // too few rows
  EXPECT_THROW(SignMatrix::parse("-\n-\n-\n-\n", 1, 1), ParseError);   // too many
  EXPECT_THROW(SignMatrix::parse("-\nx\n-\n", 1, 1), ParseError);      // bad char
  EXPECT_THROW(SignMatrix::parse("-\n\n-\n-\n", 1, 1), ParseError);    // blank inside
}

TEST(SolveCounts, PerAxisMatchesDenseInverse) {
  SplitMix64 rng(201);
  for (int m = 1; m <= 4; ++m) {
    DenseMatrix hinv = build_H_inverse(m);
    for (int trial = 0; trial < 10; ++trial) {
      SigmaVector sigma(pow3(m));
      for (int& x : sigma) x = static_cast<int>(rng.uniform(-6, 6));
      auto fast = solve_counts(sigma, m);
      for (std::size_t e = 0; e < sigma.size(); ++e) {
        Rational dense = 0;
        for (std::size_t s = 0; s < sigma.size(); ++s) dense += hinv(e, s) * Rational(sigma[s]);
        EXPECT_EQ(fast[e], dense);
      }
    }
  }
}

TEST(Tau, RoundTripFromCounts) {
  // sigma = H q for a known count vector q; solving must give q back.
  SplitMix64 rng(202);
  for (int m = 1; m <= 4; ++m) {
    DenseMatrix h = build_H(m), v = build_V(m);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<int> qs(pow3(m));
      for (int& x : qs) x = static_cast<int>(rng.uniform(0, 2));
      SigmaVector sigma(qs.size(), 0);
      for (std::size_t e = 0; e < qs.size(); ++e) {
        Rational acc = 0;
        for (std::size_t s = 0; s < qs.size(); ++s) acc += h(e, s) * Rational(qs[s]);
        sigma[e] = static_cast<int>(acc.numerator().get_si());
      }
      auto back = solve_counts(sigma, m);
      for (std::size_t s = 0; s < qs.size(); ++s) EXPECT_EQ(back[s], Rational(qs[s]));
    }
  }
}

}  // namespace
}  // namespace eigconf
