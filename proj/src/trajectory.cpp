#include "ctxmon/trajectory.hpp"

#include <cmath>
#include <string>

#include "ctxmon/errors.hpp"

namespace ctxmon {

namespace {

const char* const kSubtaskNames[kNumSubtasks] = {
    "Start",
    "Moving to the block",
    "Grabbing the block",
    "Moving up",
    "Moving to the receptacle",
    "Dropping the block",
    "End",
};

} // namespace

bool subtask_valid(SubtaskId id) { return id >= 0 && id < kNumSubtasks; }

const char* subtask_name(SubtaskId id) {
    return subtask_valid(id) ? kSubtaskNames[id] : "invalid";
}

double distance_from_origin(const TrajectorySample& s) {
    return std::sqrt(s.x_mm * s.x_mm + s.y_mm * s.y_mm + s.z_mm * s.z_mm);
}

void validate_sample(const TrajectorySample& s, size_t index) {
    if (!std::isfinite(s.x_mm) || !std::isfinite(s.y_mm) || !std::isfinite(s.z_mm)) {
        throw ValidationError("sample " + std::to_string(index) +
                              ": non-finite Cartesian position");
    }
    if (!std::isfinite(s.grasper_rad) || s.grasper_rad < 0.0 || s.grasper_rad > kPi) {
        throw ValidationError("sample " + std::to_string(index) + ": grasper angle " +
                              std::to_string(s.grasper_rad) + " outside [0, pi]");
    }
}

void validate_trajectory(const Trajectory& traj) {
    for (size_t i = 0; i < traj.samples.size(); ++i) {
        validate_sample(traj.samples[i], i);
        if (i > 0 && traj.samples[i].t_ns <= traj.samples[i - 1].t_ns) {
            throw ValidationError("sample " + std::to_string(i) +
                                  ": timestamps not strictly increasing");
        }
    }
}

std::vector<size_t> synchronize_indices(const Trajectory& traj, const FrameSequence& frames) {
    if (traj.empty() || frames.empty()) {
        throw InputError("synchronize: both streams must be non-empty");
    }
    const double period_ns = 1e9 / frames.rate_fps;
    const int64_t lo = traj.samples.front().t_ns - static_cast<int64_t>(period_ns);
    const int64_t hi = traj.samples.back().t_ns + static_cast<int64_t>(period_ns);

    std::vector<size_t> mapping;
    mapping.reserve(frames.size());
    size_t cursor = 0;
    for (size_t f = 0; f < frames.size(); ++f) {
        const int64_t t = frames.frames[f].t_ns;
        if (f > 0 && t <= frames.frames[f - 1].t_ns) {
            throw InputError("synchronize: frame " + std::to_string(f) +
                             " timestamps not strictly increasing");
        }
        if (t < lo || t > hi) {
            throw InputError("synchronize: frame " + std::to_string(f) +
                             " timestamp outside tolerated range");
        }
        // samples are sorted; advance while the next sample is strictly closer
        while (cursor + 1 < traj.size()) {
            const int64_t cur = std::llabs(traj.samples[cursor].t_ns - t);
            const int64_t nxt = std::llabs(traj.samples[cursor + 1].t_ns - t);
            if (nxt < cur) {
                ++cursor;
            } else {
                break; // tie keeps the earlier sample
            }
        }
        mapping.push_back(cursor);
    }
    return mapping;
}

SyncedRecording synchronize(const Trajectory& traj, const FrameSequence& frames) {
    SyncedRecording rec;
    rec.frame_to_sample = synchronize_indices(traj, frames);
    rec.trajectory = traj;
    rec.frames = frames;
    return rec;
}

} // namespace ctxmon
