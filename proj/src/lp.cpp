#include "fixcheck/lp.hpp"

#include <optional>

namespace fixcheck {

namespace {

// Tableau simplex over rows of basic variables. basis[i] is the variable
// whose column is the i-th unit vector.
struct Tableau {
  size_t m, n;                              // rows, total variables
  std::vector<std::vector<Rational>> a;     // m x n
  std::vector<Rational> b;                  // m
  std::vector<Rational> cost;               // n, current objective row
  Rational obj = 0;                         // negated objective value offset
  std::vector<size_t> basis;

  void pivot(size_t row, size_t col) {
    Rational p = a[row][col];
    for (size_t j = 0; j < n; ++j) a[row][j] /= p;
    b[row] /= p;
    for (size_t i = 0; i < m; ++i) {
      if (i == row || a[i][col] == 0) continue;
      Rational f = a[i][col];
      for (size_t j = 0; j < n; ++j) a[i][j] -= f * a[row][j];
      b[i] -= f * b[row];
    }
    if (cost[col] != 0) {
      Rational f = cost[col];
      for (size_t j = 0; j < n; ++j) cost[j] -= f * a[row][j];
      obj -= f * b[row];
    }
    basis[row] = col;
  }

  // Bland's rule: entering = lowest-index negative reduced cost,
  // leaving = lowest-index tightest row.
  bool optimize() {
    for (;;) {
      std::optional<size_t> enter;
      for (size_t j = 0; j < n; ++j)
        if (cost[j] < 0) { enter = j; break; }
      if (!enter) return true;
      std::optional<size_t> leave;
      Rational best = 0;
      for (size_t i = 0; i < m; ++i) {
        if (a[i][*enter] <= 0) continue;
        Rational ratio = b[i] / a[i][*enter];
        if (!leave || ratio < best || (ratio == best && basis[i] < basis[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return false;  // unbounded
      pivot(*leave, *enter);
    }
  }
};

}  // namespace

LpResult lp_minimize(std::vector<std::vector<Rational>> A, std::vector<Rational> b,
                     std::vector<Rational> c) {
  size_t m = A.size();
  size_t n = c.size();
  for (auto& row : A)
    if (row.size() != n) throw Error("lp: ragged constraint matrix");
  if (b.size() != m) throw Error("lp: rhs size mismatch");
  for (size_t i = 0; i < m; ++i) {
    if (b[i] < 0) {
      for (auto& v : A[i]) v = -v;
      b[i] = -b[i];
    }
  }

  // phase 1: artificial variables
  Tableau t;
  t.m = m;
  t.n = n + m;
  t.a = std::move(A);
  for (size_t i = 0; i < m; ++i) {
    t.a[i].resize(n + m, 0);
    t.a[i][n + i] = 1;
    t.basis.push_back(n + i);
  }
  t.b = b;
  t.cost.assign(n + m, 0);
  for (size_t j = n; j < n + m; ++j) t.cost[j] = 1;
  for (size_t i = 0; i < m; ++i) {  // price out the artificial basis
    for (size_t j = 0; j < t.n; ++j) t.cost[j] -= t.a[i][j];
    t.obj -= t.b[i];
  }
  if (!t.optimize()) throw Error("lp: phase 1 unbounded");
  if (t.obj != 0) return {};  // infeasible (phase-1 optimum is -obj)

  // drive artificial variables out of the basis; rows that cannot be
  // pivoted are redundant (all zero on original columns) and are dropped
  for (size_t i = 0; i < t.m;) {
    if (t.basis[i] < n) { ++i; continue; }
    bool pivoted = false;
    for (size_t j = 0; j < n; ++j)
      if (t.a[i][j] != 0) {
        t.pivot(i, j);
        pivoted = true;
        break;
      }
    if (pivoted) {
      ++i;
    } else {
      t.a.erase(t.a.begin() + long(i));
      t.b.erase(t.b.begin() + long(i));
      t.basis.erase(t.basis.begin() + long(i));
      --t.m;
    }
  }
  // drop the artificial columns entirely
  t.n = n;
  for (auto& row : t.a) row.resize(n);

  // phase 2
  t.cost = c;
  t.obj = 0;
  for (size_t i = 0; i < t.m; ++i) {
    Rational f = t.cost[t.basis[i]];
    if (f == 0) continue;
    for (size_t j = 0; j < t.n; ++j) t.cost[j] -= f * t.a[i][j];
    t.obj -= f * t.b[i];
  }
  if (!t.optimize()) throw Error("lp: objective unbounded below");

  LpResult res;
  res.feasible = true;
  res.value = -t.obj;
  res.x.assign(n, 0);
  for (size_t i = 0; i < t.m; ++i) res.x[t.basis[i]] = t.b[i];
  return res;
}

}  // namespace fixcheck
