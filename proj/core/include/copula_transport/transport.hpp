#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "copula_transport/signature.hpp"

namespace copula_transport {

// Row-major n x k matrix of nonnegative ground distances.
struct CostMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> costs;

  double operator()(std::size_t i, std::size_t j) const {
    return costs[i * cols + j];
  }
};

struct TransportPlan {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> flows;  // row-major
  double total_cost = 0.0;

  double operator()(std::size_t i, std::size_t j) const {
    return flows[i * cols + j];
  }
};

// Euclidean distance between every pair of atom positions.
CostMatrix ground_cost(const Signature& s1, const Signature& s2);

// A positive entry of an optimal basic solution.
struct BasicFlow {
  std::uint32_t source;
  std::uint32_t sink;
  double flow;
};

struct TransportSolution {
  double cost = 0.0;
  std::vector<BasicFlow> flows;
  std::size_t pivots = 0;
};

// Balanced transportation problem
//   min sum c_ij f_ij  s.t.  sum_j f_ij = supply_i, sum_i f_ij = demand_j, f >= 0
// solved with a primal network simplex on the complete bipartite graph.
// Entering arcs are chosen by block search in fixed arc order and the
// leaving arc by the strongly-feasible-tree rule, so the pivot sequence is
// deterministic and cannot cycle. Supplies and demands must be positive and
// have equal totals within 1e-9.
TransportSolution solve_transportation(std::span<const double> supply,
                                       std::span<const double> demand,
                                       const CostMatrix& costs);

// Exact EMD with the full optimal plan. Both signatures must share dimension
// and have unit mass within 1e-9.
TransportPlan emd_exact(const Signature& s1, const Signature& s2);

// Exact EMD value only; skips materializing the dense plan. Symmetric
// bit for bit: the pair is always solved in one canonical order.
double emd(const Signature& s1, const Signature& s2);

enum class SinkhornStatus : std::uint8_t { kConverged, kIterationLimit };

std::string_view to_string(SinkhornStatus status) noexcept;

struct SinkhornOptions {
  double epsilon = 0.005;
  double tolerance = 1e-9;
  std::size_t max_iterations = 10000;
  // Stabilized log-sum-exp updates with epsilon scaling. The plain kernel
  // path underflows once max(C) / epsilon exceeds roughly 700.
  bool log_domain = true;
};

struct SinkhornResult {
  double cost = 0.0;  // <C, P> of the returned plan
  SinkhornStatus status = SinkhornStatus::kIterationLimit;
  std::size_t iterations = 0;
  double marginal_error = 0.0;  // L1 violation of the row marginals
};

SinkhornResult emd_sinkhorn(const Signature& s1, const Signature& s2,
                            const SinkhornOptions& options = {});

enum class Solver : std::uint8_t { kExact, kSinkhorn };

std::string_view to_string(Solver solver) noexcept;
Solver parse_solver(std::string_view name);

struct EmdOptions {
  Solver solver = Solver::kExact;
  SinkhornOptions sinkhorn;
};

// Dispatches on options.solver. Identical signatures short-circuit to 0;
// arguments are put in canonical order as for emd().
double signature_distance(const Signature& s1, const Signature& s2,
                          const EmdOptions& options = {});

}  // namespace copula_transport
