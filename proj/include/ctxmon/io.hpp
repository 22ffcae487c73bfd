#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ctxmon/trajectory.hpp"

namespace ctxmon {

enum class TrajectoryFormat { Csv, Jsonl };

// CSV header: t_ns,x_mm,y_mm,z_mm,grasper_rad
// JSONL: one object per line with the same keys.
Trajectory parse_trajectory(std::istream& in, TrajectoryFormat format, double rate_hz = 1000.0);
Trajectory load_trajectory(const std::filesystem::path& path); // format from extension

void serialize_trajectory(const Trajectory& traj, std::ostream& out, TrajectoryFormat format);
void save_trajectory(const Trajectory& traj, const std::filesystem::path& path);

// JIGSAWS-style kinematics: whitespace-separated columns, no timestamps
// (synthesized from row index and rate). Column indices are 0-based; the
// defaults pick the left slave tooltip and gripper of the 76-column layout.
struct JigsawsColumns {
    size_t x = 38;
    size_t y = 39;
    size_t z = 40;
    size_t grasper = 56;
    double position_scale = 1000.0; // meters -> millimeters
    double grasper_scale = 1.0;
    double grasper_offset = 0.0;
    double rate_hz = 30.0;
};

Trajectory parse_jigsaws(std::istream& in, const JigsawsColumns& cols);

// --- per-sample subtask labels: labels.csv with header sample_index,subtask_id ---

void save_labels(const std::vector<SubtaskId>& labels, const std::filesystem::path& path);
std::vector<SubtaskId> load_labels(const std::filesystem::path& path);

// --- frame directories: binary PGM (P5, maxval 255), frame_<index>_<t_ns>.pgm ---

void save_frames(const FrameSequence& frames, const std::filesystem::path& dir);
FrameSequence load_frames(const std::filesystem::path& dir, double rate_fps = 30.0);

void write_pgm(const Raster& raster, const std::filesystem::path& path);
Raster read_pgm(const std::filesystem::path& path);

// whole-file helpers
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& content);

} // namespace ctxmon
