#include "mergecast/types.hpp"

#include <algorithm>
#include <stdexcept>

namespace mergecast {

std::string to_string(SourceTag tag) {
    switch (tag) {
        case SourceTag::ngsim_us101: return "ngsim_us101";
        case SourceTag::ngsim_i80: return "ngsim_i80";
        case SourceTag::ute_w1: return "ute_w1";
        case SourceTag::ute_w2: return "ute_w2";
        case SourceTag::synthetic: return "synthetic";
    }
    return "synthetic";
}

SourceTag source_tag_from_string(const std::string& s) {
    if (s == "ngsim_us101") return SourceTag::ngsim_us101;
    if (s == "ngsim_i80") return SourceTag::ngsim_i80;
    if (s == "ute_w1") return SourceTag::ute_w1;
    if (s == "ute_w2") return SourceTag::ute_w2;
    if (s == "synthetic") return SourceTag::synthetic;
    throw std::invalid_argument("unknown source tag: " + s);
}

const char* horizon_name(Horizon h) {
    switch (h) {
        case Horizon::h1s: return "1s";
        case Horizon::h3s: return "3s";
        case Horizon::h5s: return "5s";
    }
    return "1s";
}

bool Dataset::is_merge_lane(int lane_id) const {
    return std::binary_search(merge_lane_ids.begin(), merge_lane_ids.end(), lane_id);
}

std::size_t Dataset::total_states() const {
    std::size_t n = 0;
    for (const auto& [id, traj] : trajectories) n += traj.states.size();
    return n;
}

}  // namespace mergecast
