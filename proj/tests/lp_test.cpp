#include <doctest.h>

#include "fixcheck/lp.hpp"
#include "support.hpp"

using namespace fixcheck;
using fixcheck::testing::Rng;
using Row = std::vector<Rational>;

TEST_CASE("simple equality program") {
  // min x0 + 2 x1 s.t. x0 + x1 = 1
  auto r = lp_minimize({Row{1, 1}}, {1}, {1, 2});
  REQUIRE(r.feasible);
  CHECK(r.value == 1);
  CHECK(r.x == Row{1, 0});
}

TEST_CASE("infeasible programs") {
  // x0 = -1 with x0 >= 0
  CHECK(!lp_minimize({Row{1}}, {-1}, {1}).feasible);
  // x0 + x1 = 1 and x0 + x1 = 2
  CHECK(!lp_minimize({Row{1, 1}, Row{1, 1}}, {1, 2}, {0, 0}).feasible);
}

TEST_CASE("redundant rows are tolerated") {
  auto r = lp_minimize({Row{1, 1}, Row{2, 2}}, {1, 2}, {3, 1});
  REQUIRE(r.feasible);
  CHECK(r.value == 1);
}

TEST_CASE("degenerate transport instance") {
  // 2x2 transport: supplies (1/2, 1/2), demands (1/2, 1/2), costs 0/1/1/0
  std::vector<Row> A = {
      Row{1, 1, 0, 0}, Row{0, 0, 1, 1},  // row sums
      Row{1, 0, 1, 0}, Row{0, 1, 0, 1},  // column sums
  };
  std::vector<Rational> b = {Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)};
  auto r = lp_minimize(A, b, {0, 1, 1, 0});
  REQUIRE(r.feasible);
  CHECK(r.value == 0);
}

namespace {

// reference optimum by enumerating vertices of {x >= 0, Ax = b} via all
// column subsets (tiny instances only)
std::optional<Rational> brute_min(const std::vector<Row>& A, const std::vector<Rational>& b,
                                  const Row& c) {
  size_t m = A.size(), n = c.size();
  std::optional<Rational> best;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<size_t> cols;
    for (size_t j = 0; j < n; ++j)
      if (mask >> j & 1) cols.push_back(j);
    if (cols.size() > m) continue;
    // solve A[:, cols] y = b by gaussian elimination
    std::vector<Row> M(m, Row(cols.size() + 1));
    for (size_t i = 0; i < m; ++i) {
      for (size_t j = 0; j < cols.size(); ++j) M[i][j] = A[i][cols[j]];
      M[i][cols.size()] = b[i];
    }
    size_t rank = 0;
    for (size_t j = 0; j < cols.size() && rank < m; ++j) {
      size_t piv = rank;
      while (piv < m && M[piv][j] == 0) ++piv;
      if (piv == m) continue;
      std::swap(M[rank], M[piv]);
      for (size_t i = 0; i < m; ++i)
        if (i != rank && M[i][j] != 0) {
          Rational f = M[i][j] / M[rank][j];
          for (size_t t = 0; t <= cols.size(); ++t) M[i][t] -= f * M[rank][t];
        }
      ++rank;
    }
    // back out a solution; inconsistent or underdetermined subsets skipped
    Row y(cols.size(), 0);
    bool ok = true;
    for (size_t i = 0; i < m; ++i) {
      size_t lead = cols.size();
      for (size_t j = 0; j < cols.size(); ++j)
        if (M[i][j] != 0) {
          lead = j;
          break;
        }
      if (lead == cols.size()) {
        if (M[i][cols.size()] != 0) ok = false;
        continue;
      }
      y[lead] = M[i][cols.size()] / M[i][lead];
    }
    if (!ok) continue;
    Row x(n, 0);
    for (size_t j = 0; j < cols.size(); ++j) x[cols[j]] = y[j];
    // verify
    for (size_t i = 0; i < m && ok; ++i) {
      Rational s = 0;
      for (size_t j = 0; j < n; ++j) s += A[i][j] * x[j];
      ok = s == b[i];
    }
    for (size_t j = 0; j < n && ok; ++j) ok = x[j] >= 0;
    if (!ok) continue;
    Rational v = 0;
    for (size_t j = 0; j < n; ++j) v += c[j] * x[j];
    if (!best || v < *best) best = v;
  }
  return best;
}

}  // namespace

TEST_CASE("simplex agrees with vertex enumeration on random instances") {
  Rng rng(31);
  int feasible_seen = 0;
  for (int trial = 0; trial < 120; ++trial) {
    size_t m = rng.range(1, 3), n = rng.range(1, 5);
    std::vector<Row> A(m, Row(n));
    std::vector<Rational> b(m);
    Row c(n);
    for (auto& row : A)
      for (auto& v : row) v = rng.range(-2, 3);
    for (auto& v : b) v = rng.rational(4, 2);
    for (auto& v : c) v = Rational(rng.range(0, 3));
    auto ref = brute_min(A, b, c);
    auto got = lp_minimize(A, b, c);
    // c >= 0 keeps every feasible instance bounded, so the vertex minimum
    // is the true optimum.
    CHECK(got.feasible == ref.has_value());
    if (ref) {
      ++feasible_seen;
      CHECK(got.value == *ref);
      // returned point satisfies the constraints
      for (size_t i = 0; i < m; ++i) {
        Rational s = 0;
        for (size_t j = 0; j < n; ++j) s += A[i][j] * got.x[j];
        CHECK(s == b[i]);
      }
    }
  }
  CHECK(feasible_seen > 10);
}
