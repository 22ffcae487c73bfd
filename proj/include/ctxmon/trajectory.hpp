#pragma once

#include <cstdint>
#include <vector>

#include "ctxmon/geometry.hpp"

namespace ctxmon {

inline constexpr double kPi = 3.14159265358979323846;

// One kinematics packet: Cartesian end-effector position plus grasper angle.
struct TrajectorySample {
    int64_t t_ns = 0;      // nanoseconds since recording start
    double x_mm = 0.0;
    double y_mm = 0.0;
    double z_mm = 0.0;
    double grasper_rad = 0.0;

    Vec3 position() const { return {x_mm, y_mm, z_mm}; }
};

struct Trajectory {
    std::vector<TrajectorySample> samples;
    double rate_hz = 1000.0;

    size_t size() const { return samples.size(); }
    bool empty() const { return samples.empty(); }
};

// Subtasks of the debridement (block-transfer) task, in canonical order.
inline constexpr int kNumSubtasks = 7;
using SubtaskId = int;

bool subtask_valid(SubtaskId id);
const char* subtask_name(SubtaskId id);

double distance_from_origin(const TrajectorySample& s);

// throws ValidationError describing the first violated invariant
void validate_trajectory(const Trajectory& traj);
void validate_sample(const TrajectorySample& s, size_t index);

// --- frames ---

struct Raster {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> pixels; // row-major, 8-bit

    uint8_t at(int x, int y) const { return pixels[static_cast<size_t>(y) * width + x]; }
    uint8_t& at(int x, int y) { return pixels[static_cast<size_t>(y) * width + x]; }
};

struct Frame {
    int64_t t_ns = 0;
    Raster image;
};

struct FrameSequence {
    std::vector<Frame> frames;
    double rate_fps = 30.0;

    size_t size() const { return frames.size(); }
    bool empty() const { return frames.empty(); }
};

struct SyncedRecording {
    Trajectory trajectory;
    FrameSequence frames;
    std::vector<size_t> frame_to_sample; // one entry per frame, monotone
};

// Maps every frame to the sample with the nearest timestamp (ties toward the
// earlier sample). Frames must lie within one frame period of the sample span.
SyncedRecording synchronize(const Trajectory& traj, const FrameSequence& frames);

// Mapping only, for callers that already own both streams.
std::vector<size_t> synchronize_indices(const Trajectory& traj, const FrameSequence& frames);

} // namespace ctxmon
