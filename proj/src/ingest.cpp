#include "mergecast/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <stdexcept>

#include "mergecast/text.hpp"

namespace mergecast {

namespace {

const std::vector<std::string> kNgsimHeader = {
    "Vehicle_ID", "Frame_ID",  "Global_Time_s", "Local_X_ft", "Local_Y_ft", "v_Vel_fps",
    "v_Acc_fpss", "Lane_ID",   "Preceding",     "Following",  "Space_Headway_ft"};

const std::vector<std::string> kUteHeader = {
    "track_id",  "timestamp_s",      "longitudinal_m", "lateral_m",
    "speed_ms",  "accel_ms2",        "lane_id",        "leader_id",
    "follower_id", "leader_distance_m", "lane_change_flag"};

[[noreturn]] void row_error(const std::string& path, std::size_t line, const std::string& what) {
    throw std::runtime_error(path + ":" + std::to_string(line) + ": " + what);
}

double need_double(const std::string& field, const std::string& name, const std::string& path,
                   std::size_t line) {
    const auto v = parse_double(field);
    if (!v) row_error(path, line, "non-numeric value '" + field + "' in column " + name);
    return *v;
}

std::int64_t need_int(const std::string& field, const std::string& name, const std::string& path,
                      std::size_t line) {
    const auto v = parse_int(field);
    if (!v) row_error(path, line, "non-integer value '" + field + "' in column " + name);
    return *v;
}

}  // namespace

Schema schema_from_string(const std::string& s) {
    if (s == "ngsim") return Schema::ngsim;
    if (s == "ute") return Schema::ute;
    throw std::invalid_argument("unknown schema: " + s);
}

std::string to_string(Schema s) { return s == Schema::ngsim ? "ngsim" : "ute"; }

std::vector<RawRecord> parse_csv(const std::string& path, Schema schema) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);

    const auto& expected = schema == Schema::ngsim ? kNgsimHeader : kUteHeader;
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error(path + ": empty file, header required");
    if (!line.empty() && line.back() == '\r') line.pop_back();

    const auto header = split(line, ',');
    for (const auto& col : expected) {
        if (std::find(header.begin(), header.end(), col) == header.end()) {
            throw std::runtime_error(path + ": schema error, missing required column " + col);
        }
    }
    if (header.size() != expected.size() || !std::equal(header.begin(), header.end(), expected.begin())) {
        throw std::runtime_error(path + ": schema error, header must be exactly the canonical " +
                                 to_string(schema) + " column list");
    }

    std::vector<RawRecord> out;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        const auto f = split(line, ',');
        if (f.size() != expected.size()) {
            row_error(path, lineno,
                      "expected " + std::to_string(expected.size()) + " fields, got " +
                          std::to_string(f.size()));
        }
        RawRecord r;
        r.schema = schema;
        if (schema == Schema::ngsim) {
            r.vehicle_id = need_int(f[0], "Vehicle_ID", path, lineno);
            need_int(f[1], "Frame_ID", path, lineno);  // validated, but time is canonical
            r.t = need_double(f[2], "Global_Time_s", path, lineno);
            r.x_raw = need_double(f[3], "Local_X_ft", path, lineno);
            r.y_raw = need_double(f[4], "Local_Y_ft", path, lineno);
            r.v_raw = need_double(f[5], "v_Vel_fps", path, lineno);
            r.a_raw = need_double(f[6], "v_Acc_fpss", path, lineno);
            r.lane_id = static_cast<int>(need_int(f[7], "Lane_ID", path, lineno));
            // Preceding/Following = 0 means none; invalid zeros are kept as
            // "no leader" rather than filtered.
            const auto prec = need_int(f[8], "Preceding", path, lineno);
            const auto foll = need_int(f[9], "Following", path, lineno);
            if (prec != 0) r.leader_id = prec;
            if (foll != 0) r.follower_id = foll;
            // Raw exports use 0 (and occasionally junk negatives) as the
            // no-leader sentinel; both map to "no value".
            const double hw = need_double(f[10], "Space_Headway_ft", path, lineno);
            if (hw > 0.0) r.headway_raw = hw;
        } else {
            r.vehicle_id = need_int(f[0], "track_id", path, lineno);
            r.t = need_double(f[1], "timestamp_s", path, lineno);
            r.x_raw = need_double(f[2], "longitudinal_m", path, lineno);
            if (!trim(f[3]).empty()) {
                r.y_raw = need_double(f[3], "lateral_m", path, lineno);
            }
            r.v_raw = need_double(f[4], "speed_ms", path, lineno);
            r.a_raw = need_double(f[5], "accel_ms2", path, lineno);
            r.lane_id = static_cast<int>(need_int(f[6], "lane_id", path, lineno));
            if (!trim(f[7]).empty()) r.leader_id = need_int(f[7], "leader_id", path, lineno);
            if (!trim(f[8]).empty()) r.follower_id = need_int(f[8], "follower_id", path, lineno);
            if (!trim(f[9]).empty()) {
                const double hw = need_double(f[9], "leader_distance_m", path, lineno);
                if (hw < 0.0) row_error(path, lineno, "leader_distance_m must be >= 0");
                r.headway_raw = hw;
            }
            const auto flag = need_int(f[10], "lane_change_flag", path, lineno);
            if (flag != 0 && flag != 1) row_error(path, lineno, "lane_change_flag must be 0 or 1");
            r.lane_change_flag = static_cast<int>(flag);
        }
        if (r.lane_id < 1) row_error(path, lineno, "lane id must be >= 1");
        if (r.v_raw < 0.0) row_error(path, lineno, "speed must be >= 0");
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<RawRecord> convert_units(std::vector<RawRecord> records) {
    for (auto& r : records) {
        if (r.schema != Schema::ngsim) continue;
        r.x_raw *= kFeetToMeters;
        if (r.y_raw) *r.y_raw *= kFeetToMeters;
        r.v_raw *= kFeetToMeters;
        r.a_raw *= kFeetToMeters;
        if (r.headway_raw) *r.headway_raw *= kFeetToMeters;
    }
    return records;
}

std::vector<RawRecord> resample_10hz(std::vector<RawRecord> records) {
    std::vector<RawRecord> out;
    std::int64_t current_frame = INT64_MIN;
    double current_dist = 0.0;
    for (auto& r : records) {
        const double t_grid = std::round(r.t * 10.0) / 10.0;
        const auto frame = static_cast<std::int64_t>(std::llround(t_grid * 10.0));
        const double dist = std::abs(r.t - t_grid);
        if (frame != current_frame) {
            r.t = t_grid;
            out.push_back(std::move(r));
            current_frame = frame;
            current_dist = dist;
        } else if (dist < current_dist) {  // ties keep the earlier record
            r.t = t_grid;
            out.back() = std::move(r);
            current_dist = dist;
        }
    }
    return out;
}

void offset_correct(std::vector<RawRecord>& records, std::optional<double>& x_min_applied) {
    x_min_applied.reset();
    if (records.empty()) return;
    double x_min = records.front().x_raw;
    for (const auto& r : records) x_min = std::min(x_min, r.x_raw);
    if (x_min >= 0.0) return;
    for (auto& r : records) r.x_raw -= x_min;
    x_min_applied = x_min;
}

std::optional<std::vector<RawRecord>> interpolate_lateral(std::vector<RawRecord> traj,
                                                          std::size_t& gaps_filled) {
    gaps_filled = 0;
    std::size_t i = 0;
    const std::size_t n = traj.size();
    while (i < n) {
        if (traj[i].y_raw) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < n && !traj[j].y_raw) ++j;
        if (i == 0 || j == n) return std::nullopt;  // no flanking anchor on one side
        if (j - i > 3) return std::nullopt;
        const auto f0 = static_cast<std::int64_t>(std::llround(traj[i - 1].t * 10.0));
        const auto f1 = static_cast<std::int64_t>(std::llround(traj[j].t * 10.0));
        const double y0 = *traj[i - 1].y_raw;
        const double y1 = *traj[j].y_raw;
        for (std::size_t k = i; k < j; ++k) {
            const auto fk = static_cast<std::int64_t>(std::llround(traj[k].t * 10.0));
            const double w = static_cast<double>(fk - f0) / static_cast<double>(f1 - f0);
            traj[k].y_raw = y0 + w * (y1 - y0);
        }
        ++gaps_filled;
        i = j;
    }
    return traj;
}

std::pair<Dataset, HarmonizationReport> harmonize_records(std::vector<RawRecord> records,
                                                          SourceTag tag, int lane_max,
                                                          std::vector<int> merge_lane_ids) {
    if (lane_max < 1) throw std::invalid_argument("harmonize: lane_max must be >= 1");
    HarmonizationReport report;
    report.records_in = records.size();

    records = convert_units(std::move(records));

    // Group per vehicle, sorted by raw timestamp (stable for equal t).
    std::map<std::int64_t, std::vector<RawRecord>> per_vehicle;
    for (auto& r : records) per_vehicle[r.vehicle_id].push_back(std::move(r));
    records.clear();
    for (auto& [id, recs] : per_vehicle) {
        std::stable_sort(recs.begin(), recs.end(),
                         [](const RawRecord& a, const RawRecord& b) { return a.t < b.t; });
        recs = resample_10hz(std::move(recs));
        for (auto& r : recs) records.push_back(std::move(r));
    }

    offset_correct(records, report.x_min_applied);

    per_vehicle.clear();
    for (auto& r : records) per_vehicle[r.vehicle_id].push_back(std::move(r));

    Dataset ds;
    ds.source_tag = tag;
    ds.frequency_hz = 10.0;
    ds.lane_max = lane_max;
    std::sort(merge_lane_ids.begin(), merge_lane_ids.end());
    ds.merge_lane_ids = std::move(merge_lane_ids);

    for (auto& [id, recs] : per_vehicle) {
        std::size_t gaps = 0;
        auto filled = interpolate_lateral(std::move(recs), gaps);
        if (!filled) {
            ++report.dropped_trajectories;
            continue;
        }
        report.interpolated_gaps += gaps;

        Trajectory traj;
        traj.vehicle_id = id;
        traj.states.reserve(filled->size());
        int prev_lane = -1;
        for (const auto& r : *filled) {
            VehicleState s;
            s.vehicle_id = id;
            s.t = r.t;
            s.frame = static_cast<std::int64_t>(std::llround(r.t * 10.0));
            s.x = r.x_raw;
            s.y = r.y_raw.value();
            s.v = r.v_raw;
            s.a = r.a_raw;
            if (r.lane_id > lane_max) {
                throw std::runtime_error("harmonize: lane_id " + std::to_string(r.lane_id) +
                                         " exceeds configured lane_max " + std::to_string(lane_max));
            }
            s.lane_id = r.lane_id;
            s.lane_norm = static_cast<double>(r.lane_id) / static_cast<double>(lane_max);
            // ngsim exports carry no flag column; a lane switch between
            // consecutive records marks the change frame.
            s.lane_change_flag = r.schema == Schema::ngsim
                                     ? (prev_lane >= 0 && r.lane_id != prev_lane ? 1 : 0)
                                     : r.lane_change_flag;
            prev_lane = r.lane_id;
            s.leader_id = r.leader_id;
            s.follower_id = r.follower_id;
            s.space_headway = r.headway_raw;
            traj.states.push_back(std::move(s));
        }
        report.records_out += traj.states.size();
        ds.trajectories.emplace(id, std::move(traj));
    }
    return {std::move(ds), report};
}

std::pair<Dataset, HarmonizationReport> harmonize(const std::string& path, Schema schema,
                                                  SourceTag tag, int lane_max,
                                                  std::vector<int> merge_lane_ids) {
    return harmonize_records(parse_csv(path, schema), tag, lane_max, std::move(merge_lane_ids));
}

void write_harmonized_csv(const Dataset& dataset, const std::string& path) {
    std::ofstream out(path, std::ios::binary);  // binary: LF endings everywhere
    if (!out) throw std::runtime_error("cannot write file: " + path);
    for (std::size_t i = 0; i < kUteHeader.size(); ++i) {
        out << (i ? "," : "") << kUteHeader[i];
    }
    out << "\n";
    for (const auto& [id, traj] : dataset.trajectories) {
        for (const auto& s : traj.states) {
            out << id << ',' << fmt_double(s.t) << ',' << fmt_double(s.x) << ','
                << fmt_double(s.y) << ',' << fmt_double(s.v) << ',' << fmt_double(s.a) << ','
                << s.lane_id << ',';
            if (s.leader_id) out << *s.leader_id;
            out << ',';
            if (s.follower_id) out << *s.follower_id;
            out << ',';
            if (s.space_headway) out << fmt_double(*s.space_headway);
            out << ',' << s.lane_change_flag << "\n";
        }
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace mergecast
