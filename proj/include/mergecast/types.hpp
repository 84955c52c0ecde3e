#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mergecast {

// One vehicle's kinematic record at one 10 Hz frame, Frenet road-aligned
// coordinates (x longitudinal, y lateral), SI units throughout.
struct VehicleState {
    std::int64_t vehicle_id = 0;
    std::int64_t frame = 0;  // 10 Hz grid index; frame == round(t * 10)
    double t = 0.0;          // seconds, audit only
    double x = 0.0;          // m
    double y = 0.0;          // m
    double v = 0.0;          // m/s, >= 0
    double a = 0.0;          // m/s^2
    int lane_id = 1;         // >= 1
    double lane_norm = 0.0;  // lane_id / lane_max, in [0,1]
    int lane_change_flag = 0;
    std::optional<std::int64_t> leader_id;
    std::optional<std::int64_t> follower_id;
    std::optional<double> space_headway;  // m, >= 0 when present
};

// Ordered state sequence for one vehicle: strictly increasing frames,
// at most one state per frame.
struct Trajectory {
    std::int64_t vehicle_id = 0;
    std::vector<VehicleState> states;
};

enum class SourceTag { ngsim_us101, ngsim_i80, ute_w1, ute_w2, synthetic };

std::string to_string(SourceTag tag);
SourceTag source_tag_from_string(const std::string& s);

struct Dataset {
    SourceTag source_tag = SourceTag::synthetic;
    double frequency_hz = 10.0;
    int lane_max = 1;
    std::vector<int> merge_lane_ids;  // sorted
    std::map<std::int64_t, Trajectory> trajectories;

    bool is_merge_lane(int lane_id) const;
    std::size_t total_states() const;
};

enum class Horizon { h1s = 0, h3s = 1, h5s = 2 };

inline constexpr int kNumHorizons = 3;
inline constexpr int kHorizonSteps[kNumHorizons] = {10, 30, 50};
inline constexpr int kObsWindow = 30;   // observed frames per sample
inline constexpr int kMaxFuture = 50;   // longest horizon, frames

const char* horizon_name(Horizon h);
inline int horizon_steps(Horizon h) { return kHorizonSteps[static_cast<int>(h)]; }

// Future displacements relative to the last observed position; one
// (dx, dy) entry per prediction step.
struct DisplacementTarget {
    Horizon horizon = Horizon::h1s;
    std::vector<std::pair<double, double>> steps;
};

}  // namespace mergecast
