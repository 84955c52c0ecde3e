#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "mergecast/trajectory_ops.hpp"
#include "mergecast/types.hpp"

namespace mergecast {

inline constexpr double kTtcSentinel = 999.0;
inline constexpr int kEdgeDim = 5;

// Lane relationship codes carried on every directed edge.
enum LaneRelation : int { kSameLane = 0, kLeftLane = 1, kRightLane = 2, kMergingLane = 3 };

// Five-dimensional feature of the directed edge j -> i (influence of j on i).
struct EdgeFeature {
    double dx = 0.0;   // x_j - x_i, m
    double dy = 0.0;   // y_j - y_i, m
    double dv = 0.0;   // v_j - v_i, m/s
    double ttc = kTtcSentinel;  // s, in [0, 999]
    int r = kSameLane;

    std::array<double, kEdgeDim> as_vector() const {
        return {dx, dy, dv, ttc, static_cast<double>(r)};
    }
};

struct SceneEdge {
    int src = 0;  // node index of the influencing vehicle j
    int dst = 0;  // node index of the influenced vehicle i
    EdgeFeature feature;
    bool mandatory = false;  // structural edge, kept regardless of distance
};

// Per-frame directed interaction graph. Nodes are ordered by vehicle id;
// node_features rows are the six-vector [x, y, v, a, lane_norm, flag].
struct SceneGraph {
    std::int64_t frame = 0;
    std::vector<std::int64_t> nodes;
    std::vector<std::array<double, 6>> node_features;
    std::vector<SceneEdge> edges;

    int node_index(std::int64_t vehicle_id) const;  // -1 when absent
};

// 30 consecutive graphs ending at the anchor frame, plus the vehicles that
// are predictable from this anchor.
struct GraphSequence {
    std::vector<SceneGraph> frames;  // exactly kObsWindow, consecutive
    std::vector<std::int64_t> target_vehicles;

    const SceneGraph& anchor() const { return frames.back(); }
};

// 95th percentile (linear interpolation between order statistics) of all
// recorded leader distances pooled across the given datasets. Throws when no
// finite headway exists.
double estimate_rmax(const std::vector<const Dataset*>& datasets);

// Longitudinal time-to-collision: dx/dv when dx > 0 and dv > 0, clipped to
// [0, 999]; the sentinel 999 otherwise.
double compute_ttc(double dx, double dv);

// Lane relationship code for the edge j -> i. `left_is_lower` selects the
// orientation convention (true: lower lane index is to the left).
int lane_relation(const VehicleState& state_i, const VehicleState& state_j,
                  const Dataset& dataset, bool left_is_lower = true);

// Builds the directed graph over one frame's states. Edges exist under the
// proximity rule (Euclidean distance <= rmax), recorded leader/follower
// links, or adjacent-lane pairs within +-10 m longitudinal separation; the
// latter two are mandatory and flagged as such.
SceneGraph build_graph(const std::vector<VehicleState>& scene_states, double rmax,
                       const Dataset& dataset, bool left_is_lower = true);

inline constexpr double kAdjacentLaneRange = 10.0;  // m

// One GraphSequence per eligible anchor, targets resolved via
// extract_windows. `stride` advances the anchor frame between sequences.
struct SequenceBatch {
    GraphSequence sequence;
    // Windows aligned with target_vehicles (same order).
    std::vector<SampleWindow> windows;
};
std::vector<SequenceBatch> build_sequences(const Dataset& dataset, double rmax, int stride,
                                           bool left_is_lower = true);

// Line-oriented dump for oracle diffing: EDGE src dst dx dy dv ttc r mandatory.
std::string dump_graph(const SceneGraph& graph);

}  // namespace mergecast
