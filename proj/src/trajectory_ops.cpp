#include "mergecast/trajectory_ops.hpp"

#include <cmath>
#include <stdexcept>

#include "mergecast/rng.hpp"

namespace mergecast {

std::map<std::int64_t, std::vector<VehicleState>> index_by_frame(const Dataset& dataset) {
    std::map<std::int64_t, std::vector<VehicleState>> out;
    for (const auto& [id, traj] : dataset.trajectories) {
        for (const auto& s : traj.states) out[s.frame].push_back(s);
    }
    return out;
}

std::vector<SampleWindow> extract_windows(const Trajectory& traj, int stride) {
    if (stride < 1) throw std::invalid_argument("extract_windows: stride must be >= 1");
    std::vector<SampleWindow> out;
    const auto& st = traj.states;
    const std::size_t n = st.size();
    if (n < static_cast<std::size_t>(kObsWindow + kMaxFuture)) return out;

    for (std::size_t k = kObsWindow - 1; k + kMaxFuture < n;
         k += static_cast<std::size_t>(stride)) {
        // Require gap-free frames across history and the full 50-step future;
        // one window feeds all three horizons.
        bool ok = true;
        for (std::size_t i = k + 1 - (kObsWindow - 1); i <= k + kMaxFuture && ok; ++i) {
            if (st[i].frame != st[i - 1].frame + 1) ok = false;
        }
        if (!ok) continue;

        SampleWindow w;
        w.anchor_frame = st[k].frame;
        w.history.assign(st.begin() + static_cast<std::ptrdiff_t>(k) - (kObsWindow - 1),
                         st.begin() + static_cast<std::ptrdiff_t>(k) + 1);
        const double x0 = st[k].x;
        const double y0 = st[k].y;
        for (int h = 0; h < kNumHorizons; ++h) {
            auto& tgt = w.targets[static_cast<std::size_t>(h)];
            tgt.horizon = static_cast<Horizon>(h);
            tgt.steps.reserve(static_cast<std::size_t>(kHorizonSteps[h]));
            for (int s = 1; s <= kHorizonSteps[h]; ++s) {
                const auto& fut = st[k + static_cast<std::size_t>(s)];
                tgt.steps.emplace_back(fut.x - x0, fut.y - y0);
            }
        }
        out.push_back(std::move(w));
    }
    return out;
}

VehicleSplit split_vehicles(const Dataset& dataset, std::array<double, 3> fractions,
                            std::uint64_t seed) {
    const double sum = fractions[0] + fractions[1] + fractions[2];
    if (std::abs(sum - 1.0) > 1e-9) {
        throw std::invalid_argument("split_vehicles: fractions must sum to 1");
    }
    std::vector<std::int64_t> ids;
    ids.reserve(dataset.trajectories.size());
    for (const auto& [id, traj] : dataset.trajectories) ids.push_back(id);
    const std::size_t n = ids.size();
    if (n < 3) {
        throw std::runtime_error("split_vehicles: need at least 3 vehicles, got " +
                                 std::to_string(n));
    }

    Rng rng(seed);
    rng.shuffle(ids);

    // Floor with a small guard so exact products (e.g. 0.7 * 10) round to the
    // intended integer; remainder goes to train.
    const auto sized = [n](double f) {
        return static_cast<std::size_t>(std::floor(f * static_cast<double>(n) + 1e-9));
    };
    const std::size_t n_val = sized(fractions[1]);
    const std::size_t n_test = sized(fractions[2]);
    const std::size_t n_train = n - n_val - n_test;

    VehicleSplit split;
    std::size_t i = 0;
    for (; i < n_train; ++i) split.train.insert(ids[i]);
    for (; i < n_train + n_val; ++i) split.val.insert(ids[i]);
    for (; i < n; ++i) split.test.insert(ids[i]);
    return split;
}

}  // namespace mergecast
