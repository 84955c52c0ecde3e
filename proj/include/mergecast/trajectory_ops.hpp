#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "mergecast/types.hpp"

namespace mergecast {

// History window plus displacement targets for all three horizons; the anchor
// is the last history state.
struct SampleWindow {
    std::vector<VehicleState> history;                  // exactly kObsWindow states
    std::array<DisplacementTarget, kNumHorizons> targets;
    std::int64_t anchor_frame = 0;
};

// Frame -> states present at that frame, ascending frame order.
std::map<std::int64_t, std::vector<VehicleState>> index_by_frame(const Dataset& dataset);

// Emits one window per eligible anchor. An anchor k is eligible when the 30
// history frames ending at k and the 50 future frames after k are all present
// with consecutive frame indices. Anchors advance by `stride` over the
// trajectory's state list. Short or gapped trajectories yield fewer (possibly
// zero) windows; this is not an error.
std::vector<SampleWindow> extract_windows(const Trajectory& traj, int stride);

struct VehicleSplit {
    std::set<std::int64_t> train;
    std::set<std::int64_t> val;
    std::set<std::int64_t> test;
};

// Vehicle-level split. Val/test sizes are floor(fraction * n); the remainder
// goes to train. Deterministic for a fixed seed. Throws if the dataset has
// fewer than 3 vehicles or the fractions do not sum to 1.
VehicleSplit split_vehicles(const Dataset& dataset, std::array<double, 3> fractions,
                            std::uint64_t seed);

}  // namespace mergecast
