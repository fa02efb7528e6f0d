#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "lgsst/dynamics.hpp"
#include "lgsst/lead.hpp"
#include "lgsst/monitor.hpp"
#include "lgsst/spatial_grid.hpp"
#include "lgsst/world.hpp"

namespace lgsst::planner {

using dynamics::CarControl;
using dynamics::CarState;

struct PlannerParams {
  double sampler_radius = 1.0;      // s_r, m
  double propagation_radius = 1.5;  // r_prop, m
  double max_duration = 1.0;        // T_max, s
  std::uint64_t max_iterations = 1'000'000;
  double time_budget = 60.0;        // s (wall clock, or virtual when deterministic)
  double selection_radius = 0.5;    // delta_v, m
  double pruning_radius = 0.25;     // delta_s, m
  double goal_epsilon = 0.3;        // m
  double heading_weight = 0.3;      // m/rad in the selection metric
  double dt = 0.05;                 // integrator step, s

  /// Select only among nodes in layers adjacent to the sampled layer.
  bool layer_restricted_selection = true;
  /// Stop once the cost reaches its lower bound 0 (formula satisfied);
  /// false keeps planning until the budget runs out.
  bool stop_on_satisfied = true;
  /// Measure the budget in iterations * virtual_iteration_seconds.
  bool deterministic = false;
  double virtual_iteration_seconds = 1e-4;
  std::uint64_t metrics_period = 1000;

  void validate() const {
    auto positive = [](double v, const char* name) {
      if (!(v > 0.0)) throw std::invalid_argument(std::string(name) + " must be positive");
    };
    positive(sampler_radius, "sampler radius");
    positive(propagation_radius, "propagation radius");
    positive(max_duration, "max propagation duration");
    positive(time_budget, "time budget");
    positive(selection_radius, "selection radius");
    positive(pruning_radius, "pruning radius");
    positive(goal_epsilon, "goal epsilon");
    positive(dt, "integrator step");
    positive(virtual_iteration_seconds, "virtual iteration time");
    if (heading_weight < 0.0) throw std::invalid_argument("heading weight must be >= 0");
    if (max_iterations == 0) throw std::invalid_argument("iteration cap must be positive");
    if (metrics_period == 0) throw std::invalid_argument("metrics period must be positive");
    if (!(pruning_radius < selection_radius))
      throw std::invalid_argument("pruning radius must be smaller than the selection radius");
  }

  std::vector<std::string> warnings() const {
    std::vector<std::string> out;
    if (propagation_radius < sampler_radius)
      out.push_back("propagation radius is smaller than the sampler radius; many samples will be unreachable");
    return out;
  }
};

/// Robot system: workspace, Ackermann parameters and initial state.
struct Problem {
  Workspace workspace;
  dynamics::CarParams car;
  CarState x_init;
};

/// A trajectory point; `control` and `duration` are the edge that reached it
/// (zero at the root).
struct TrajectoryPoint {
  double t = 0.0;
  CarState state;
  CarControl control;
  double duration = 0.0;
  int layer = 0;

  friend bool operator==(const TrajectoryPoint&, const TrajectoryPoint&) = default;
};
using Trajectory = std::vector<TrajectoryPoint>;

struct MetricSample {
  std::uint64_t iteration = 0;
  double seconds = 0.0;
  double best_cost = std::numeric_limits<double>::infinity();
  std::size_t states = 0;  // peak tree size so far

  friend bool operator==(const MetricSample&, const MetricSample&) = default;
};

/// Where iterations ended up.
struct IterationStats {
  std::uint64_t sampling_failed = 0;
  std::uint64_t zero_duration = 0;
  std::uint64_t collision = 0;
  std::uint64_t off_lead = 0;
  std::uint64_t layer_jump = 0;
  std::uint64_t dominated = 0;  // lost against the witness representative
  std::uint64_t inserted = 0;

  friend bool operator==(const IterationStats&, const IterationStats&) = default;
};

struct PlanResult {
  Trajectory trajectory;
  std::optional<double> robustness;  // folded partial robustness of the returned node
  double cost = std::numeric_limits<double>::infinity();
  bool satisfied = false;
  bool complete = false;  // every temporal window observed along the trajectory
  double best_cost = std::numeric_limits<double>::infinity();
  std::vector<MetricSample> metrics;
  std::size_t states = 0;  // peak number of nodes alive in the tree
  std::size_t alive = 0;   // nodes alive at the end
  std::uint64_t iterations = 0;
  double elapsed = 0.0;
  IterationStats stats;
};

struct TreeNode {
  CarState state;
  double t = 0.0;
  std::int32_t parent = -1;
  CarControl control;
  double duration = 0.0;
  int layer = 0;
  monitor::Annotation annotation;
  double cost = 0.0;
  std::uint32_t unobserved = 0;
  bool racing = false;  // inside a bounded window that is still violated
  std::int32_t witness = -1;
  std::uint32_t children = 0;
  bool active = true;
  bool alive = true;
};

struct Witness {
  CarState location;
  std::int32_t representative = -1;
};

struct AuditReport {
  std::size_t layer_violations = 0;
  std::size_t radius_violations = 0;
  std::size_t collision_violations = 0;
  std::size_t replay_violations = 0;
  std::size_t sparsity_violations = 0;
  std::size_t nodes_checked = 0;

  std::size_t total() const {
    return layer_violations + radius_violations + collision_violations + replay_violations + sparsity_violations;
  }
};

/// Root-to-node sequence of the tree.
inline Trajectory reconstruct(const std::vector<TreeNode>& nodes, std::int32_t node) {
  Trajectory out;
  for (std::int32_t k = node; k >= 0; k = nodes[static_cast<std::size_t>(k)].parent) {
    const TreeNode& n = nodes[static_cast<std::size_t>(k)];
    out.push_back({n.t, n.state, n.control, n.duration, n.layer});
  }
  std::reverse(out.begin(), out.end());
  return out;
}

/// Stable sparse tree planner minimizing the partial-robustness cost. With
/// a lead path it runs the layer-guided variant; without one it is the
/// uniform-sampling baseline.
class SstStlPlanner {
public:
  SstStlPlanner(const Problem& problem, const monitor::MonitorTemplate& tmpl, const geolead::LeadPath* lead,
                PlannerParams params, std::uint64_t seed)
      : problem_(problem), monitor_(tmpl), lead_(lead), params_(params), rng_(seed) {
    params_.validate();
    problem_.car.validate();
    const int layers = lead_ ? lead_->layer_count() : 1;
    active_.reserve(static_cast<std::size_t>(layers));
    for (int l = 0; l < layers; ++l) active_.emplace_back(problem_.workspace.bounds(), params_.selection_radius);
    witness_index_.emplace(problem_.workspace.bounds(), std::max(params_.pruning_radius, 0.25));
    if (lead_) goal_disk_ = lead_->layers().back().disk;
    add_root();
  }

  bool guided() const { return lead_ != nullptr; }
  const std::vector<TreeNode>& nodes() const { return nodes_; }
  const std::vector<Witness>& witnesses() const { return witnesses_; }
  std::size_t state_count() const { return alive_; }

  PlanResult run() { return run_until(params_.time_budget); }

  /// Continues planning until the cumulative clock reaches `budget` seconds
  /// (or the iteration cap). May be called repeatedly with growing budgets.
  PlanResult run_until(double budget) {
    const auto start = std::chrono::steady_clock::now();
    const double before = clock_;
    auto seconds = [&]() {
      if (params_.deterministic) return static_cast<double>(it_) * params_.virtual_iteration_seconds;
      return before + std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };

    if (metrics_.empty()) record(seconds());
    bool done = params_.stop_on_satisfied && satisfied_;
    while (!done && it_ < params_.max_iterations) {
      if (seconds() >= budget) break;
      ++it_;
      const bool improved = iterate();
      if (improved || it_ % params_.metrics_period == 0) record(seconds());
      if (params_.stop_on_satisfied && satisfied_) done = true;
    }
    clock_ = seconds();
    if (metrics_.back().iteration != it_) record(clock_);
    return result();
  }

  PlanResult result() const {
    PlanResult r;
    r.iterations = it_;
    r.elapsed = clock_;
    r.metrics = metrics_;
    r.trajectory = best_trajectory_;
    r.satisfied = satisfied_;
    r.best_cost = best_cost_;
    r.states = peak_alive_;
    r.alive = alive_;
    r.stats = stats_;
    if (best_node_snapshot_) {
      r.robustness = best_node_snapshot_->fold;
      r.cost = best_node_snapshot_->cost;
      r.complete = best_node_snapshot_->complete;
    }
    return r;
  }

  /// Structured-text snapshot of the tree: one line per node.
  void dump_tree(std::ostream& out) const {
    out << "# lgsst-tree 1\n# id parent t x y theta layer cost unobserved active alive\n";
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
      const TreeNode& n = nodes_[k];
      out << k << ' ' << n.parent << ' ' << n.t << ' ' << n.state.x << ' ' << n.state.y << ' ' << n.state.theta << ' '
          << n.layer << ' ' << n.cost << ' ' << n.unobserved << ' ' << n.active << ' ' << n.alive << '\n';
    }
  }

  /// Post-run consistency audit of the tree: layer adjacency, lead radius,
  /// per-substep collision freedom, edge replay and witness sparsity.
  AuditReport audit() const {
    AuditReport rep;
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
      const TreeNode& n = nodes_[k];
      if (!n.alive) continue;
      ++rep.nodes_checked;
      if (n.parent < 0) continue;
      const TreeNode& p = nodes_[static_cast<std::size_t>(n.parent)];
      if (lead_) {
        if (std::abs(n.layer - p.layer) > 1) ++rep.layer_violations;
        if (lead_->dist_to_lead(n.state.position()) > params_.propagation_radius) ++rep.radius_violations;
      }
      bool free = true;
      Vec2 prev = p.state.position();
      const CarState end = dynamics::propagate_visit(p.state, n.control, n.duration, params_.dt, problem_.car.wheelbase,
                                                     [&](double, const CarState& s) {
                                                       free = free && problem_.workspace.segment_free(prev, s.position());
                                                       prev = s.position();
                                                       return true;
                                                     });
      if (!free) ++rep.collision_violations;
      if (std::abs(end.x - n.state.x) > 1e-9 || std::abs(end.y - n.state.y) > 1e-9 ||
          std::abs(dynamics::normalize_angle(end.theta - n.state.theta)) > 1e-9)
        ++rep.replay_violations;
    }
    // Each active node represents exactly one witness and lies within delta_s of it.
    std::vector<int> represented(witnesses_.size(), 0);
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
      const TreeNode& n = nodes_[k];
      if (!n.alive || !n.active) continue;
      if (n.witness < 0) {
        ++rep.sparsity_violations;
        continue;
      }
      const Witness& w = witnesses_[static_cast<std::size_t>(n.witness)];
      if (w.representative != static_cast<std::int32_t>(k)) ++rep.sparsity_violations;
      if (metric(w.location, n.state) > params_.pruning_radius) ++rep.sparsity_violations;
      ++represented[static_cast<std::size_t>(n.witness)];
    }
    for (std::size_t w = 0; w < witnesses_.size(); ++w) {
      if (represented[w] > 1) ++rep.sparsity_violations;
      const std::int32_t r = witnesses_[w].representative;
      if (r >= 0 && (!nodes_[static_cast<std::size_t>(r)].alive || !nodes_[static_cast<std::size_t>(r)].active))
        ++rep.sparsity_violations;
    }
    return rep;
  }

private:
  struct Snapshot {
    std::optional<double> fold;
    double cost = 0.0;
    bool complete = false;
    double t = 0.0;
    std::uint32_t unobserved = 0;
  };

  double metric(const CarState& a, const CarState& b) const {
    const double dth = dynamics::normalize_angle(a.theta - b.theta);
    const double w = params_.heading_weight * dth;
    return std::sqrt((a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y) + w * w);
  }

  // SST comparison: lower cost wins, then fewer unobserved windows. Full
  // ties go by time: a node racing an open, still violated bounded window
  // prefers the earlier arrival (more time left to repair it); otherwise the
  // later one wins, so the tree can wait in place for a window to open.
  struct Rank {
    double cost;
    std::uint32_t unobserved;
    double t;
    bool racing;
  };

  static bool better(const Rank& a, const Rank& b) {
    if (a.cost != b.cost) return a.cost < b.cost;
    if (a.unobserved != b.unobserved) return a.unobserved < b.unobserved;
    return (a.racing || b.racing) ? a.t < b.t : a.t > b.t;
  }

  static Rank rank(const TreeNode& n) { return {n.cost, n.unobserved, n.t, n.racing}; }

  bool racing(const monitor::Annotation& ann, double t) const {
    for (std::size_t i = 0; i < ann.slots.size(); ++i)
      if (monitor_.slot_bounded(i) && monitor_.slot_interval(i).contains(t) && ann.slots[i] && *ann.slots[i] < 0.0)
        return true;
    return false;
  }

  void add_root() {
    TreeNode root;
    root.state = problem_.x_init;
    root.state.theta = dynamics::normalize_angle(root.state.theta);
    const auto s = root.state.as_array();
    root.annotation = monitor_.annotate_root(s, 0.0);
    root.cost = monitor_.node_cost(root.annotation);
    root.unobserved = static_cast<std::uint32_t>(monitor_.unobserved(root.annotation));
    root.racing = racing(root.annotation, 0.0);
    root.layer = lead_ ? lead_->layer_assign(root.state.position()) : 0;
    root.witness = 0;
    witnesses_.push_back({root.state, 0});
    witness_index_->insert(0, root.state.position());
    nodes_.push_back(std::move(root));
    active_[static_cast<std::size_t>(nodes_[0].layer)].insert(0, nodes_[0].state.position());
    alive_ = 1;
    peak_alive_ = 1;
    consider(0);
  }

  bool is_goal_node(const TreeNode& n) const {
    if (!lead_) return true;
    if (distance(n.state.position(), goal_disk_.center) > params_.goal_epsilon) return false;
    return n.parent < 0 || n.layer == lead_->layer_count() - 1;
  }

  // Updates the best-node bookkeeping; returns true when the reported best cost improved.
  bool consider(std::int32_t id) {
    const TreeNode& n = nodes_[static_cast<std::size_t>(id)];
    const bool complete = n.unobserved == 0;
    if (complete && is_goal_node(n)) {
      const bool sat = monitor_.is_satisfied(n.annotation);
      if (!best_complete_ || n.cost < best_cost_ || (n.cost == best_cost_ && n.t < best_time_)) {
        const bool improved = n.cost < best_cost_;
        best_complete_ = true;
        best_cost_ = n.cost;
        best_time_ = n.t;
        satisfied_ = satisfied_ || sat;
        snapshot(id);
        return improved;
      }
      return false;
    }
    if (best_complete_) return false;
    // No complete goal node yet: keep the most informative partial node.
    const bool first = !best_node_snapshot_;
    if (first || n.unobserved < best_partial_unobserved_ ||
        (n.unobserved == best_partial_unobserved_ &&
         (n.cost < best_partial_cost_ || (n.cost == best_partial_cost_ && n.t < best_time_)))) {
      best_partial_unobserved_ = n.unobserved;
      best_partial_cost_ = n.cost;
      best_time_ = n.t;
      snapshot(id);
    }
    return false;
  }

  void snapshot(std::int32_t id) {
    const TreeNode& n = nodes_[static_cast<std::size_t>(id)];
    best_trajectory_ = reconstruct(nodes_, id);
    best_node_snapshot_ = Snapshot{monitor_.fold(n.annotation), n.cost, n.unobserved == 0, n.t, n.unobserved};
  }

  void record(double secs) { metrics_.push_back({it_, secs, best_cost_, peak_alive_}); }

  // One sample-select-propagate-insert step. Returns true if the best cost improved.
  bool iterate() {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    int layer_rand = 0;
    Vec2 sample;
    if (lead_) {
      const int layers = lead_->layer_count();
      layer_rand = std::uniform_int_distribution<int>(0, layers - 1)(rng_);
      try {
        sample = lead_->sample_near_layer(layer_rand, params_.sampler_radius, problem_.workspace, rng_);
      } catch (const geolead::SamplingExhausted&) {
        ++stats_.sampling_failed;
        return false;
      }
    } else {
      const Bounds& b = problem_.workspace.bounds();
      sample = {b.x_min + u01(rng_) * b.width(), b.y_min + u01(rng_) * b.height()};
    }
    const CarState target{sample.x, sample.y, std::numbers::pi * (2.0 * u01(rng_) - 1.0)};

    const std::int32_t selected = select(target, layer_rand);
    if (selected < 0) return false;

    const CarControl u = dynamics::sample_control(rng_, problem_.car);
    const double duration = dynamics::sample_duration(rng_, params_.max_duration);
    if (dynamics::substep_count(duration, params_.dt) == 0) {
      ++stats_.zero_duration;
      return false;
    }

    const TreeNode& parent = nodes_[static_cast<std::size_t>(selected)];
    scratch_ = parent.annotation;
    bool free = true;
    Vec2 prev = parent.state.position();
    const double t0 = parent.t;
    const CarState end = dynamics::propagate_visit(parent.state, u, duration, params_.dt, problem_.car.wheelbase,
                                                   [&](double tau, const CarState& s) {
                                                     const Vec2 p = s.position();
                                                     if (!problem_.workspace.segment_free(prev, p)) {
                                                       free = false;
                                                       return false;
                                                     }
                                                     prev = p;
                                                     const auto arr = s.as_array();
                                                     monitor_.advance(scratch_, arr, t0 + tau);
                                                     return true;
                                                   });
    if (!free) {
      ++stats_.collision;
      return false;
    }

    int layer = 0;
    if (lead_) {
      if (lead_->dist_to_lead(end.position()) > params_.propagation_radius) {
        ++stats_.off_lead;
        return false;
      }
      layer = lead_->layer_assign(end.position());
      if (std::abs(layer - parent.layer) > 1) {
        ++stats_.layer_jump;
        return false;
      }
    }

    const double cost = monitor_.node_cost(scratch_);
    const auto unobserved = static_cast<std::uint32_t>(monitor_.unobserved(scratch_));

    // Locally-best test against the nearest witness.
    std::int32_t witness = -1;
    {
      double best_d = std::numeric_limits<double>::infinity();
      witness_index_->for_each_near(end.position(), params_.pruning_radius, [&](PlanarGrid::Handle h) {
        const double d = metric(witnesses_[h].location, end);
        if (d <= params_.pruning_radius && (d < best_d || (d == best_d && static_cast<std::int32_t>(h) < witness)))
          best_d = d, witness = static_cast<std::int32_t>(h);
      });
    }
    if (witness >= 0) {
      const std::int32_t rep = witnesses_[static_cast<std::size_t>(witness)].representative;
      if (rep >= 0) {
        const TreeNode& r = nodes_[static_cast<std::size_t>(rep)];
        if (!better({cost, unobserved, t0 + duration, racing(scratch_, t0 + duration)}, rank(r))) {
          ++stats_.dominated;
          return false;
        }
      }
    } else {
      witness = static_cast<std::int32_t>(witnesses_.size());
      witnesses_.push_back({end, -1});
      witness_index_->insert(static_cast<PlanarGrid::Handle>(witness), end.position());
    }

    ++stats_.inserted;
    TreeNode node;
    node.state = end;
    node.t = t0 + duration;
    node.parent = selected;
    node.control = u;
    node.duration = duration;
    node.layer = layer;
    node.annotation = scratch_;
    node.cost = cost;
    node.unobserved = unobserved;
    node.racing = racing(scratch_, node.t);
    node.witness = witness;
    nodes_[static_cast<std::size_t>(selected)].children += 1;
    // Slots of pruned nodes are reused.
    std::int32_t id;
    if (free_.empty()) {
      id = static_cast<std::int32_t>(nodes_.size());
      nodes_.push_back(std::move(node));
    } else {
      id = free_.back();
      free_.pop_back();
      nodes_[static_cast<std::size_t>(id)] = std::move(node);
    }
    ++alive_;
    peak_alive_ = std::max(peak_alive_, alive_);
    active_[static_cast<std::size_t>(layer)].insert(static_cast<PlanarGrid::Handle>(id), end.position());

    Witness& w = witnesses_[static_cast<std::size_t>(witness)];
    const std::int32_t peer = w.representative;
    w.representative = id;
    if (peer >= 0) {
      TreeNode& pn = nodes_[static_cast<std::size_t>(peer)];
      pn.active = false;
      pn.witness = -1;
      active_[static_cast<std::size_t>(pn.layer)].erase(static_cast<PlanarGrid::Handle>(peer), pn.state.position());
      prune_dead_branch(peer);
    }
    return consider(id);
  }

  // Best-near selection among active nodes in the layers adjacent to layer_rand.
  std::int32_t select(const CarState& target, int layer_rand) {
    int lo = 0, hi = static_cast<int>(active_.size()) - 1;
    if (lead_ && params_.layer_restricted_selection) {
      lo = std::max(0, layer_rand - 1);
      hi = std::min(hi, layer_rand + 1);
    }
    std::int32_t best = -1;
    for (int l = lo; l <= hi; ++l) {
      active_[static_cast<std::size_t>(l)].for_each_near(
          target.position(), params_.selection_radius, [&](PlanarGrid::Handle h) {
            const TreeNode& n = nodes_[h];
            if (metric(n.state, target) > params_.selection_radius) return;
            if (best < 0) {
              best = static_cast<std::int32_t>(h);
              return;
            }
            const Rank a = rank(n), b = rank(nodes_[static_cast<std::size_t>(best)]);
            const bool tie = !better(a, b) && !better(b, a);
            if (better(a, b) || (tie && static_cast<std::int32_t>(h) < best)) best = static_cast<std::int32_t>(h);
          });
    }
    if (best >= 0) return best;

    double best_d = std::numeric_limits<double>::infinity();
    for (int l = lo; l <= hi; ++l) {
      PlanarGrid::Handle h = 0;
      double d = 0.0;
      if (active_[static_cast<std::size_t>(l)].nearest(
              target.position(), [&](PlanarGrid::Handle k) { return metric(nodes_[k].state, target); }, h, d) &&
          (d < best_d || (d == best_d && static_cast<std::int32_t>(h) < best))) {
        best_d = d;
        best = static_cast<std::int32_t>(h);
      }
    }
    return best;
  }

  void prune_dead_branch(std::int32_t id) {
    while (id > 0) {
      TreeNode& n = nodes_[static_cast<std::size_t>(id)];
      if (n.active || n.children > 0 || !n.alive) return;
      n.alive = false;
      n.annotation.slots.clear();
      n.annotation.slots.shrink_to_fit();
      --alive_;
      free_.push_back(id);
      const std::int32_t parent = n.parent;
      nodes_[static_cast<std::size_t>(parent)].children -= 1;
      id = parent;
    }
  }

  Problem problem_;
  const monitor::MonitorTemplate& monitor_;
  const geolead::LeadPath* lead_;
  PlannerParams params_;
  dynamics::Rng rng_;

  std::vector<TreeNode> nodes_;
  std::vector<Witness> witnesses_;
  std::vector<PlanarGrid> active_;
  std::optional<PlanarGrid> witness_index_;
  std::size_t alive_ = 0;
  std::size_t peak_alive_ = 0;
  std::vector<std::int32_t> free_;
  geolead::Disk goal_disk_;
  monitor::Annotation scratch_;

  bool best_complete_ = false;
  bool satisfied_ = false;
  double best_cost_ = std::numeric_limits<double>::infinity();
  double best_time_ = 0.0;
  std::uint32_t best_partial_unobserved_ = 0;
  double best_partial_cost_ = 0.0;
  std::optional<Snapshot> best_node_snapshot_;
  Trajectory best_trajectory_;

  std::uint64_t it_ = 0;
  double clock_ = 0.0;
  IterationStats stats_;
  std::vector<MetricSample> metrics_;
};

/// Layer-guided planner over a lead path.
inline PlanResult lg_sst_stl(const Problem& problem, const geolead::LeadPath& lead,
                             const monitor::MonitorTemplate& tmpl, const PlannerParams& params, std::uint64_t seed) {
  SstStlPlanner planner(problem, tmpl, &lead, params, seed);
  return planner.run();
}

/// Uniform-sampling baseline with the same cost and sparsification.
inline PlanResult baseline_sst_stl(const Problem& problem, const monitor::MonitorTemplate& tmpl,
                                   const PlannerParams& params, std::uint64_t seed) {
  SstStlPlanner planner(problem, tmpl, nullptr, params, seed);
  return planner.run();
}

}  // namespace lgsst::planner
