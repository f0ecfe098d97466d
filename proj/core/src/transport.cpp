#include "copula_transport/transport.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "copula_transport/error.hpp"

namespace copula_transport {
namespace {

constexpr double kBalanceTolerance = 1e-9;

// Primal network simplex for the uncapacitated bipartite transportation
// problem. Node layout: sources 0..n-1, sinks n..n+k-1, artificial root n+k.
// Arc layout: real arc (i, j) has id i*k + j; the artificial arc of node u
// has id n*k + u and links u to the root (source -> root, root -> sink).
//
// The spanning tree is stored as per-node lists of incident basic arcs.
// After a pivot only the subtree cut off by the leaving arc is re-hung from
// the entering arc; its parent, depth and potential entries are refreshed
// by a traversal of that subtree alone.
class NetworkSimplex {
 public:
  NetworkSimplex(std::span<const double> supply, std::span<const double> demand,
                 const CostMatrix& costs)
      : sources_(supply.size()),
        sinks_(demand.size()),
        nodes_(sources_ + sinks_ + 1),
        root_(sources_ + sinks_),
        real_arcs_(sources_ * sinks_),
        arcs_(real_arcs_ + sources_ + sinks_),
        costs_(costs.costs),
        flow_(arcs_, 0.0),
        in_tree_(arcs_, 0),
        incident_(nodes_),
        parent_(nodes_),
        pred_arc_(nodes_),
        depth_(nodes_),
        pred_up_(nodes_),
        potential_(nodes_),
        stack_(nodes_) {
    double max_cost = 0.0;
    for (double c : costs_) max_cost = std::max(max_cost, c);
    artificial_cost_ = (max_cost + 1.0) * static_cast<double>(nodes_);
    pricing_tolerance_ = 1e-13 * artificial_cost_;
    block_size_ = std::max<std::size_t>(
        10, static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(arcs_)))));

    incident_[root_].reserve(sources_ + sinks_);
    for (std::size_t u = 0; u < sources_ + sinks_; ++u) {
      const auto arc = static_cast<std::uint32_t>(real_arcs_ + u);
      flow_[arc] = u < sources_ ? supply[u] : demand[u - sources_];
      in_tree_[arc] = 1;
      incident_[u].push_back(arc);
      incident_[root_].push_back(arc);
    }
    parent_[root_] = static_cast<std::uint32_t>(root_);
    depth_[root_] = 0;
    potential_[root_] = 0.0;
    pred_arc_[root_] = 0;
    for (std::uint32_t arc : incident_[root_]) {
      hang(arc - real_arcs_, arc, root_);
    }
  }

  TransportSolution solve() {
    TransportSolution solution;
    for (;;) {
      const std::size_t entering = find_entering_arc();
      if (entering == kNoArc) break;
      pivot(entering);
      ++solution.pivots;
    }
    for (std::size_t u = 0; u < sources_ + sinks_; ++u) {
      if (flow_[real_arcs_ + u] > kBalanceTolerance) {
        throw NumericalError(
            "transport solver defect: artificial arc keeps flow " +
            std::to_string(flow_[real_arcs_ + u]) + " at optimum");
      }
    }
    std::vector<std::uint32_t> basic;
    for (std::size_t u = 0; u < sources_; ++u) {
      for (std::uint32_t arc : incident_[u]) {
        if (arc < real_arcs_ && flow_[arc] > 0.0) basic.push_back(arc);
      }
    }
    std::sort(basic.begin(), basic.end());
    solution.flows.reserve(basic.size());
    for (std::uint32_t arc : basic) {
      solution.cost += flow_[arc] * costs_[arc];
      solution.flows.push_back({static_cast<std::uint32_t>(arc / sinks_),
                                static_cast<std::uint32_t>(arc % sinks_), flow_[arc]});
    }
    return solution;
  }

 private:
  static constexpr std::size_t kNoArc = std::numeric_limits<std::size_t>::max();

  std::size_t tail(std::size_t arc) const {
    if (arc < real_arcs_) return arc / sinks_;
    const std::size_t u = arc - real_arcs_;
    return u < sources_ ? u : root_;
  }
  std::size_t head(std::size_t arc) const {
    if (arc < real_arcs_) return sources_ + arc % sinks_;
    const std::size_t u = arc - real_arcs_;
    return u < sources_ ? root_ : u;
  }
  double cost(std::size_t arc) const {
    return arc < real_arcs_ ? costs_[arc] : artificial_cost_;
  }

  // Block search: scan arcs cyclically from where the last search stopped and
  // take the most negative reduced cost of the first block that has one.
  // Tree arcs have zero reduced cost and never pass the tolerance test.
  std::size_t find_entering_arc() {
    double best = -pricing_tolerance_;
    std::size_t best_arc = kNoArc;
    std::size_t arc = next_arc_;
    std::size_t in_block = 0;
    std::size_t row = arc < real_arcs_ ? arc / sinks_ : 0;
    std::size_t col = arc < real_arcs_ ? arc % sinks_ : 0;
    const double* sink_potential = potential_.data() + sources_;
    for (std::size_t scanned = 0; scanned < arcs_; ++scanned) {
      double reduced;
      if (arc < real_arcs_) {
        reduced = costs_[arc] + potential_[row] - sink_potential[col];
        if (++col == sinks_) {
          col = 0;
          ++row;
        }
      } else {
        reduced = artificial_cost_ + potential_[tail(arc)] - potential_[head(arc)];
      }
      if (reduced < best && !in_tree_[arc]) {
        best = reduced;
        best_arc = arc;
      }
      if (++arc == arcs_) {
        arc = 0;
        row = 0;
        col = 0;
      }
      if (++in_block == block_size_) {
        if (best_arc != kNoArc) break;
        in_block = 0;
      }
    }
    next_arc_ = arc;
    return best_arc;
  }

  void pivot(std::size_t entering) {
    const std::size_t first = tail(entering);
    const std::size_t second = head(entering);
    std::size_t u = first;
    std::size_t v = second;
    while (u != v) {
      if (depth_[u] > depth_[v]) {
        u = parent_[u];
      } else if (depth_[v] > depth_[u]) {
        v = parent_[v];
      } else {
        u = parent_[u];
        v = parent_[v];
      }
    }
    const std::size_t join = u;

    // Flow is pushed first -> second along the entering arc, then up from
    // second to the join and down from the join to first. Only arcs whose
    // flow decreases can block. Ties prefer the last blocking arc met on the
    // cycle walk (strict on the first side, non-strict on the second), which
    // keeps the tree strongly feasible.
    double delta = std::numeric_limits<double>::infinity();
    std::size_t leaving_node = kNoArc;
    for (u = first; u != join; u = parent_[u]) {
      if (pred_up_[u] && flow_[pred_arc_[u]] < delta) {
        delta = flow_[pred_arc_[u]];
        leaving_node = u;
      }
    }
    for (u = second; u != join; u = parent_[u]) {
      if (!pred_up_[u] && flow_[pred_arc_[u]] <= delta) {
        delta = flow_[pred_arc_[u]];
        leaving_node = u;
      }
    }
    if (leaving_node == kNoArc) {
      throw NumericalError("transport solver defect: unbounded pivot");
    }

    if (delta > 0.0) {
      flow_[entering] += delta;
      for (u = first; u != join; u = parent_[u]) {
        flow_[pred_arc_[u]] += pred_up_[u] ? -delta : delta;
      }
      for (u = second; u != join; u = parent_[u]) {
        flow_[pred_arc_[u]] += pred_up_[u] ? delta : -delta;
      }
    }
    const std::size_t leaving = pred_arc_[leaving_node];
    flow_[leaving] = 0.0;
    in_tree_[leaving] = 0;
    in_tree_[entering] = 1;
    detach(leaving_node, static_cast<std::uint32_t>(leaving));
    detach(parent_[leaving_node], static_cast<std::uint32_t>(leaving));
    incident_[first].push_back(static_cast<std::uint32_t>(entering));
    incident_[second].push_back(static_cast<std::uint32_t>(entering));

    // The subtree below leaving_node holds exactly one endpoint of the
    // entering arc; hang it from the other.
    bool first_side = false;
    for (u = first; u != join; u = parent_[u]) {
      if (u == leaving_node) {
        first_side = true;
        break;
      }
    }
    if (first_side) {
      hang(first, entering, second);
    } else {
      hang(second, entering, first);
    }
  }

  void detach(std::size_t node, std::uint32_t arc) {
    auto& list = incident_[node];
    const auto it = std::find(list.begin(), list.end(), arc);
    *it = list.back();
    list.pop_back();
  }

  // Makes `top` a child of `anchor` through `arc` and refreshes the labels of
  // everything reachable from `top` without crossing `arc`.
  void hang(std::size_t top, std::size_t arc, std::size_t anchor) {
    set_label(top, arc, anchor);
    std::size_t depth = 0;
    stack_[depth++] = static_cast<std::uint32_t>(top);
    while (depth > 0) {
      const std::size_t u = stack_[--depth];
      for (std::uint32_t a : incident_[u]) {
        if (a == pred_arc_[u]) continue;
        const std::size_t t = tail(a);
        const std::size_t v = t == u ? head(a) : t;
        set_label(v, a, u);
        stack_[depth++] = static_cast<std::uint32_t>(v);
      }
    }
  }

  void set_label(std::size_t v, std::size_t arc, std::size_t u) {
    parent_[v] = static_cast<std::uint32_t>(u);
    pred_arc_[v] = static_cast<std::uint32_t>(arc);
    depth_[v] = depth_[u] + 1;
    pred_up_[v] = tail(arc) == v;
    // Reduced cost c + pi(tail) - pi(head) vanishes on tree arcs.
    potential_[v] = pred_up_[v] ? potential_[u] - cost(arc) : potential_[u] + cost(arc);
  }

  std::size_t sources_;
  std::size_t sinks_;
  std::size_t nodes_;
  std::size_t root_;
  std::size_t real_arcs_;
  std::size_t arcs_;
  std::span<const double> costs_;
  double artificial_cost_ = 0.0;
  double pricing_tolerance_ = 0.0;
  std::size_t block_size_ = 10;
  std::size_t next_arc_ = 0;

  std::vector<double> flow_;
  std::vector<char> in_tree_;
  std::vector<std::vector<std::uint32_t>> incident_;

  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> pred_arc_;
  std::vector<std::uint32_t> depth_;
  std::vector<char> pred_up_;
  std::vector<double> potential_;

  std::vector<std::uint32_t> stack_;
};

void require_comparable(const Signature& s1, const Signature& s2) {
  if (s1.dimension() != s2.dimension()) {
    throw DataError("signature dimensions differ: " + std::to_string(s1.dimension()) +
                    " vs " + std::to_string(s2.dimension()));
  }
}

void require_normalized(const Signature& s) {
  const double mass = s.total_mass();
  if (std::abs(mass - 1.0) > kBalanceTolerance) {
    throw DataError("signature mass " + std::to_string(mass) +
                    " is not 1; EMD requires normalized signatures");
  }
}

// Total order on signatures. Distances are evaluated with the arguments in
// this order so that d(a, b) and d(b, a) are bitwise equal.
bool precedes(const Signature& a, const Signature& b) {
  if (a.resolution() != b.resolution()) return a.resolution() < b.resolution();
  if (a.size() != b.size()) return a.size() < b.size();
  if (!std::ranges::equal(a.cells(), b.cells())) {
    return std::ranges::lexicographical_compare(a.cells(), b.cells());
  }
  return std::ranges::lexicographical_compare(a.weights(), b.weights());
}

double log_sum_exp(const double* values, std::size_t count, std::size_t stride) {
  double peak = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < count; ++k) peak = std::max(peak, values[k * stride]);
  if (!std::isfinite(peak)) return peak;
  double sum = 0.0;
  for (std::size_t k = 0; k < count; ++k) sum += std::exp(values[k * stride] - peak);
  return peak + std::log(sum);
}

void validate_sinkhorn_options(const SinkhornOptions& options) {
  if (!(options.epsilon > 0.0) || !std::isfinite(options.epsilon)) {
    throw InvalidArgument("Sinkhorn epsilon must be positive");
  }
  if (!(options.tolerance > 0.0)) {
    throw InvalidArgument("Sinkhorn tolerance must be positive");
  }
  if (options.max_iterations == 0) {
    throw InvalidArgument("Sinkhorn needs at least one iteration");
  }
}

SinkhornResult sinkhorn_log_domain(std::span<const double> a, std::span<const double> b,
                                   const CostMatrix& costs, const SinkhornOptions& options) {
  const std::size_t n = a.size();
  const std::size_t k = b.size();
  double max_cost = 0.0;
  for (double c : costs.costs) max_cost = std::max(max_cost, c);

  std::vector<double> log_a(n), log_b(k);
  for (std::size_t i = 0; i < n; ++i) log_a[i] = std::log(a[i]);
  for (std::size_t j = 0; j < k; ++j) log_b[j] = std::log(b[j]);

  std::vector<double> f(n, 0.0), g(k, 0.0), scratch(n * k), lse_rows(n);
  SinkhornResult result;

  // Epsilon scaling: halve from max(C) down to the target, warm-starting the
  // potentials; intermediate stages only need a coarse fit.
  std::vector<double> schedule;
  for (double e = std::max(max_cost, options.epsilon); e > options.epsilon; e *= 0.5) {
    schedule.push_back(e);
  }
  schedule.push_back(options.epsilon);

  bool out_of_budget = false;
  for (std::size_t stage = 0; stage < schedule.size() && !out_of_budget; ++stage) {
    const double eps = schedule[stage];
    const bool last = stage + 1 == schedule.size();
    const double stage_tolerance = last ? options.tolerance : std::max(options.tolerance, 1e-4);
    for (;;) {
      if (result.iterations == options.max_iterations) {
        out_of_budget = true;
        break;
      }
      ++result.iterations;
      // g_j = eps log b_j - eps LSE_i((f_i - C_ij) / eps)
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          scratch[j * n + i] = (f[i] - costs(i, j)) / eps;
        }
      }
      for (std::size_t j = 0; j < k; ++j) {
        g[j] = eps * (log_b[j] - log_sum_exp(scratch.data() + j * n, n, 1));
      }
      // Columns now match exactly; measure the row violation.
      double error = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          scratch[i * k + j] = (g[j] - costs(i, j)) / eps;
        }
        lse_rows[i] = log_sum_exp(scratch.data() + i * k, k, 1);
        error += std::abs(std::exp(f[i] / eps + lse_rows[i]) - a[i]);
      }
      if (!std::isfinite(error)) {
        throw NumericalError("Sinkhorn diverged at epsilon=" + std::to_string(eps));
      }
      result.marginal_error = error;
      if (error < stage_tolerance) {
        if (last) result.status = SinkhornStatus::kConverged;
        break;
      }
      for (std::size_t i = 0; i < n; ++i) f[i] = eps * (log_a[i] - lse_rows[i]);
    }
  }

  const double eps = options.epsilon;
  double cost = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      cost += std::exp((f[i] + g[j] - costs(i, j)) / eps) * costs(i, j);
    }
  }
  result.cost = cost;
  return result;
}

SinkhornResult sinkhorn_kernel(std::span<const double> a, std::span<const double> b,
                               const CostMatrix& costs, const SinkhornOptions& options) {
  const std::size_t n = a.size();
  const std::size_t k = b.size();
  const double eps = options.epsilon;
  auto underflow = [&] {
    return NumericalError("Sinkhorn kernel underflow at epsilon=" + std::to_string(eps) +
                          "; use the log-domain solver or a larger epsilon");
  };
  std::vector<double> kernel(n * k);
  for (std::size_t idx = 0; idx < n * k; ++idx) kernel[idx] = std::exp(-costs.costs[idx] / eps);
  std::vector<double> u(n, 1.0), v(k, 1.0), row(n);
  SinkhornResult result;
  for (;;) {
    if (result.iterations == options.max_iterations) break;
    ++result.iterations;
    for (std::size_t j = 0; j < k; ++j) {
      double s = 0.0;
      for (std::size_t i = 0; i < n; ++i) s += kernel[i * k + j] * u[i];
      if (!(s > 0.0) || !std::isfinite(s)) throw underflow();
      v[j] = b[j] / s;
    }
    double error = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < k; ++j) s += kernel[i * k + j] * v[j];
      if (!(s > 0.0) || !std::isfinite(s)) throw underflow();
      row[i] = s;
      error += std::abs(u[i] * s - a[i]);
    }
    result.marginal_error = error;
    if (error < options.tolerance) {
      result.status = SinkhornStatus::kConverged;
      break;
    }
    for (std::size_t i = 0; i < n; ++i) u[i] = a[i] / row[i];
  }
  double cost = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      cost += u[i] * kernel[i * k + j] * v[j] * costs(i, j);
    }
  }
  if (!std::isfinite(cost)) throw underflow();
  result.cost = cost;
  return result;
}

}  // namespace

CostMatrix ground_cost(const Signature& s1, const Signature& s2) {
  require_comparable(s1, s2);
  const std::size_t d = s1.dimension();
  CostMatrix matrix{s1.size(), s2.size(), std::vector<double>(s1.size() * s2.size())};
  std::vector<double> p1(s1.size() * d), p2(s2.size() * d);
  for (std::size_t a = 0; a < s1.size(); ++a) {
    for (std::size_t i = 0; i < d; ++i) p1[a * d + i] = s1.coordinate(a, i);
  }
  for (std::size_t b = 0; b < s2.size(); ++b) {
    for (std::size_t i = 0; i < d; ++i) p2[b * d + i] = s2.coordinate(b, i);
  }
  for (std::size_t a = 0; a < s1.size(); ++a) {
    for (std::size_t b = 0; b < s2.size(); ++b) {
      double sq = 0.0;
      for (std::size_t i = 0; i < d; ++i) {
        const double diff = p1[a * d + i] - p2[b * d + i];
        sq += diff * diff;
      }
      matrix.costs[a * matrix.cols + b] = std::sqrt(sq);
    }
  }
  return matrix;
}

TransportSolution solve_transportation(std::span<const double> supply,
                                       std::span<const double> demand,
                                       const CostMatrix& costs) {
  if (supply.empty() || demand.empty()) {
    throw DataError("transportation problem needs at least one source and one sink");
  }
  if (costs.rows != supply.size() || costs.cols != demand.size() ||
      costs.costs.size() != supply.size() * demand.size()) {
    throw DataError("cost matrix shape does not match supplies and demands");
  }
  double total_supply = 0.0;
  double total_demand = 0.0;
  for (double s : supply) {
    if (!(s > 0.0) || !std::isfinite(s)) throw DataError("supplies must be positive");
    total_supply += s;
  }
  for (double d : demand) {
    if (!(d > 0.0) || !std::isfinite(d)) throw DataError("demands must be positive");
    total_demand += d;
  }
  if (std::abs(total_supply - total_demand) > kBalanceTolerance) {
    throw DataError("unbalanced transportation problem: supply " +
                    std::to_string(total_supply) + " vs demand " +
                    std::to_string(total_demand));
  }
  for (double c : costs.costs) {
    if (!(c >= 0.0) || !std::isfinite(c)) throw DataError("costs must be finite and nonnegative");
  }
  return NetworkSimplex(supply, demand, costs).solve();
}

TransportPlan emd_exact(const Signature& s1, const Signature& s2) {
  require_comparable(s1, s2);
  require_normalized(s1);
  require_normalized(s2);
  const CostMatrix costs = ground_cost(s1, s2);
  TransportPlan plan{s1.size(), s2.size(), std::vector<double>(s1.size() * s2.size(), 0.0), 0.0};
  if (s1 == s2) {
    for (std::size_t a = 0; a < s1.size(); ++a) plan.flows[a * plan.cols + a] = s1.weight(a);
    return plan;
  }
  const TransportSolution solution = solve_transportation(s1.weights(), s2.weights(), costs);
  for (const BasicFlow& f : solution.flows) plan.flows[f.source * plan.cols + f.sink] = f.flow;
  plan.total_cost = solution.cost;
  return plan;
}

double emd(const Signature& s1, const Signature& s2) {
  require_comparable(s1, s2);
  require_normalized(s1);
  require_normalized(s2);
  if (s1 == s2) return 0.0;
  if (precedes(s2, s1)) return emd(s2, s1);
  return solve_transportation(s1.weights(), s2.weights(), ground_cost(s1, s2)).cost;
}

std::string_view to_string(SinkhornStatus status) noexcept {
  return status == SinkhornStatus::kConverged ? "converged" : "iteration limit";
}

SinkhornResult emd_sinkhorn(const Signature& s1, const Signature& s2,
                            const SinkhornOptions& options) {
  validate_sinkhorn_options(options);
  require_comparable(s1, s2);
  require_normalized(s1);
  require_normalized(s2);
  const CostMatrix costs = ground_cost(s1, s2);
  return options.log_domain ? sinkhorn_log_domain(s1.weights(), s2.weights(), costs, options)
                            : sinkhorn_kernel(s1.weights(), s2.weights(), costs, options);
}

std::string_view to_string(Solver solver) noexcept {
  return solver == Solver::kExact ? "exact" : "sinkhorn";
}

Solver parse_solver(std::string_view name) {
  if (name == "exact") return Solver::kExact;
  if (name == "sinkhorn") return Solver::kSinkhorn;
  throw InvalidArgument("unknown solver '" + std::string(name) + "'");
}

double signature_distance(const Signature& s1, const Signature& s2,
                          const EmdOptions& options) {
  if (options.solver == Solver::kExact) return emd(s1, s2);
  require_comparable(s1, s2);
  if (s1 == s2) return 0.0;
  if (precedes(s2, s1)) return emd_sinkhorn(s2, s1, options.sinkhorn).cost;
  return emd_sinkhorn(s1, s2, options.sinkhorn).cost;
}

}  // namespace copula_transport
