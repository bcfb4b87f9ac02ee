#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "parikh/mfsp.hpp"
#include "parikh/oracle.hpp"
#include "test_support.hpp"

namespace parikh {
namespace {

void expect_window(const MfspResult& r, std::int64_t ell, std::int64_t right, std::uint64_t len) {
  EXPECT_EQ(r.ell, ell);
  EXPECT_EQ(r.r, right);
  EXPECT_EQ(r.length, len);
}

TEST(Mfsp, Examples) {
  expect_window(mfsp("abacbbadc", "aabbc"), 0, 4, 5);
  expect_window(mfsp("abc", ""), 0, -1, 0);
  expect_window(mfsp("ddd", "abc"), 0, -1, 0);
  expect_window(mfsp("abc", "cba"), 0, 2, 3);
  expect_window(mfsp("", "abc"), 0, -1, 0);
  expect_window(mfsp("xaabbyab", "ab"), 2, 3, 2);
}

TEST(Mfsp, LeftmostAmongEqualOptima) {
  // (0,4) and (2,6) both have length 5.
  auto r = mfsp("abacbbadc", "aabbc");
  EXPECT_EQ(r.ell, 0);
}

TEST(Mfsp, MatchesBruteForce) {
  testing::StringGen g(21);
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t sigma = g.uniform(1, 8);
    auto t = g.string(g.uniform(0, 40), sigma);
    auto p = g.string(g.uniform(0, 20), sigma);
    auto r = mfsp(t, p);
    auto want = oracle::brute_mfsp(t, p);
    ASSERT_EQ(r.length, want.length) << t << " / " << p;
    ASSERT_EQ(r.ell, want.ell);
    ASSERT_EQ(r.r, want.r);
  }
}

TEST(Mfsp, CountersAndWindowBound) {
  testing::StringGen g(22);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t sigma = g.uniform(1, 6);
    auto t = g.string(g.uniform(0, 60), sigma);
    auto p = g.string(g.uniform(0, 15), sigma);
    auto alpha = build_alphabet<char>({bytes(p), bytes(t)});
    auto tid = encode(bytes(t), alpha);
    auto pid = encode(bytes(p), alpha);
    auto r = detail::mfsp_ids(tid, pid, alpha.size(),
                              [&](std::size_t right, std::size_t ell, const FeasState& s) {
                                ASSERT_TRUE(s.feasible());
                                ASSERT_LE(right + 1 - ell, p.size());
                                // counts equal the window's
                                auto w = parikh_of_ids(
                                    std::span<const SymbolId>(tid).subspan(ell, right + 1 - ell),
                                    alpha.size());
                                for (SymbolId c = 0; c < alpha.size(); ++c)
                                  ASSERT_EQ(s.count(c), w[c]);
                              });
    ASSERT_EQ(r.pushes, t.size());
    ASSERT_LE(r.advances, t.size());
  }
}

TEST(Mfsp, WindowIsMaximalForEachRightEnd) {
  testing::StringGen g(23);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t sigma = g.uniform(1, 5);
    auto t = g.string(g.uniform(1, 40), sigma);
    auto p = g.string(g.uniform(0, 12), sigma);
    auto alpha = build_alphabet<char>({bytes(p), bytes(t)});
    auto tid = encode(bytes(t), alpha);
    auto pid = encode(bytes(p), alpha);
    const auto supply = parikh_of_ids(pid, alpha.size());
    detail::mfsp_ids(tid, pid, alpha.size(), [&](std::size_t right, std::size_t ell, const FeasState&) {
      if (ell == 0) return;
      auto wider = parikh_of_ids(
          std::span<const SymbolId>(tid).subspan(ell - 1, right + 2 - ell), alpha.size());
      ASSERT_FALSE(wider.dominated_by(supply)) << t << " / " << p << " r=" << right;
    });
  }
}

TEST(Mfsp, SubstringsOfFeasibleAreFeasible) {
  testing::StringGen g(24);
  for (int trial = 0; trial < 500; ++trial) {
    auto t = g.string(g.uniform(1, 30), 4);
    auto p = g.string(g.uniform(0, 12), 4);
    auto r = mfsp(t, p);
    if (r.length == 0) continue;
    auto alpha = build_alphabet<char>({bytes(p), bytes(t)});
    const auto supply = parikh(bytes(p), alpha);
    auto best = std::string_view(t).substr(static_cast<std::size_t>(r.ell), r.length);
    ASSERT_TRUE(parikh(bytes(best), alpha).dominated_by(supply));
    for (std::size_t a = 0; a < best.size(); ++a)
      for (std::size_t b = a; b <= best.size(); ++b)
        ASSERT_TRUE(parikh(bytes(best.substr(a, b - a)), alpha).dominated_by(supply));
  }
}

TEST(FeasState, PushCrossingIntoViolation) {
  FeasState s(ParikhVector(std::vector<std::uint64_t>{1, 2}));
  s.push(0);
  EXPECT_EQ(s.violations(), 0u);  // cnt < sup before, == sup after
  s.push(0);
  EXPECT_EQ(s.violations(), 1u);  // cnt == sup before
  s.push(0);
  EXPECT_EQ(s.violations(), 1u);  // already violating
  s.push(1);
  EXPECT_EQ(s.violations(), 1u);
}

TEST(FeasState, PopResolvingViolation) {
  FeasState s(ParikhVector(std::vector<std::uint64_t>{1, 0}));
  s.push(0);
  s.push(0);
  ASSERT_EQ(s.violations(), 1u);
  s.pop_left(0);  // sup+1 -> sup
  EXPECT_EQ(s.violations(), 0u);
  s.pop_left(0);  // sup -> sup-1
  EXPECT_EQ(s.violations(), 0u);
  s.push(1);
  ASSERT_EQ(s.violations(), 1u);
  s.pop_left(1);  // zero-supply boundary
  EXPECT_EQ(s.violations(), 0u);
}

TEST(FeasState, PopOnEmptyThrows) {
  FeasState s(ParikhVector(std::vector<std::uint64_t>{1}));
  EXPECT_THROW(s.pop_left(0), UnderflowViolation);
}

TEST(FeasState, RandomSequencesKeepViolationCount) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t sigma = 1 + rng() % 8;
    std::vector<std::uint64_t> sup(sigma);
    for (auto& c : sup) c = rng() % 4;
    FeasState s{ParikhVector(sup)};
    for (int k = 0; k < 64; ++k) {
      const auto c = static_cast<SymbolId>(rng() % sigma);
      if (rng() % 2 && s.count(c) > 0)
        s.pop_left(c);
      else
        s.push(c);
      std::size_t viol = 0;
      for (SymbolId d = 0; d < sigma; ++d) viol += s.count(d) > sup[d];
      ASSERT_EQ(s.violations(), viol);
    }
  }
}

TEST(StreamingMfsp, AgreesWithBatchScan) {
  testing::StringGen g(25);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t sigma = g.uniform(1, 8);
    auto t = g.string(g.uniform(0, 60), sigma);
    auto p = g.string(g.uniform(0, 20), sigma);
    StreamingMfsp<char> scan(bytes(p));
    for (char c : t) scan.push(c);
    auto got = scan.result();
    auto want = mfsp(t, p);
    ASSERT_EQ(got.ell, want.ell);
    ASSERT_EQ(got.r, want.r);
    ASSERT_EQ(got.length, want.length);
    ASSERT_EQ(got.pushes, want.pushes);
    ASSERT_EQ(got.advances, want.advances);
    ASSERT_EQ(got.n, t.size());
  }
}

TEST(Mfsp, TokenSymbols) {
  std::vector<std::string> t{"x", "a", "b", "a", "y"};
  std::vector<std::string> p{"a", "b", "a"};
  expect_window(mfsp(t, p), 1, 3, 3);
}

}  // namespace
}  // namespace parikh
