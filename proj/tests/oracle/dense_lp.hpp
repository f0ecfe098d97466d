#pragma once

// Textbook two-phase tableau simplex with Bland's rule, used only as an
// independent reference for the transportation solver. Dense and slow on
// purpose: nothing here shares code with the network simplex.

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

namespace oracle {

// min c.x  s.t.  A x = b, x >= 0, with b >= 0. A is row-major m x n.
inline double solve_standard_lp(const std::vector<double>& A, const std::vector<double>& b,
                                const std::vector<double>& c, std::size_t m, std::size_t n) {
  constexpr double eps = 1e-12;
  const std::size_t cols = n + m + 1;  // structural, artificial, rhs
  std::vector<double> T(m * cols, 0.0);
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) T[i * cols + j] = A[i * n + j];
    T[i * cols + n + i] = 1.0;
    T[i * cols + cols - 1] = b[i];
    basis[i] = n + i;
  }

  auto run = [&](const std::vector<double>& cost, std::size_t allowed) {
    for (;;) {
      // Reduced costs c_j - c_B B^-1 A_j, read off the tableau.
      std::size_t entering = cols;
      for (std::size_t j = 0; j < allowed; ++j) {
        double reduced = cost[j];
        for (std::size_t i = 0; i < m; ++i) reduced -= cost[basis[i]] * T[i * cols + j];
        if (reduced < -eps) {
          entering = j;
          break;
        }
      }
      if (entering == cols) return;
      std::size_t leaving = m;
      double ratio = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < m; ++i) {
        const double a = T[i * cols + entering];
        if (a > eps) {
          const double r = T[i * cols + cols - 1] / a;
          if (r < ratio - eps || (std::abs(r - ratio) <= eps && basis[i] < basis[leaving])) {
            ratio = r;
            leaving = i;
          }
        }
      }
      if (leaving == m) throw std::runtime_error("oracle LP unbounded");
      const double pivot = T[leaving * cols + entering];
      for (std::size_t j = 0; j < cols; ++j) T[leaving * cols + j] /= pivot;
      for (std::size_t i = 0; i < m; ++i) {
        if (i == leaving) continue;
        const double f = T[i * cols + entering];
        if (f == 0.0) continue;
        for (std::size_t j = 0; j < cols; ++j) T[i * cols + j] -= f * T[leaving * cols + j];
      }
      basis[leaving] = entering;
    }
  };

  std::vector<double> phase1(cols - 1, 0.0);
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = 1.0;
  run(phase1, cols - 1);
  double infeasibility = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] >= n) infeasibility += T[i * cols + cols - 1];
  }
  if (infeasibility > 1e-9) throw std::runtime_error("oracle LP infeasible");

  // Artificials left in the basis sit at zero (redundant rows); they may not
  // re-enter, and their zero cost keeps them neutral.
  std::vector<double> phase2(cols - 1, 0.0);
  for (std::size_t j = 0; j < n; ++j) phase2[j] = c[j];
  run(phase2, n);
  double value = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) value += c[basis[i]] * T[i * cols + cols - 1];
  }
  return value;
}

// Balanced transportation problem as a standard-form LP.
inline double transportation_cost(const std::vector<double>& supply,
                                  const std::vector<double>& demand,
                                  const std::vector<double>& cost) {
  const std::size_t n = supply.size();
  const std::size_t k = demand.size();
  const std::size_t vars = n * k;
  const std::size_t rows = n + k;
  std::vector<double> A(rows * vars, 0.0);
  std::vector<double> b(rows);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      A[i * vars + i * k + j] = 1.0;
      A[(n + j) * vars + i * k + j] = 1.0;
    }
    b[i] = supply[i];
  }
  for (std::size_t j = 0; j < k; ++j) b[n + j] = demand[j];
  return solve_standard_lp(A, b, cost, rows, vars);
}

}  // namespace oracle
