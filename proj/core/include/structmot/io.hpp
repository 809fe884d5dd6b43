#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "structmot/geometry.hpp"
#include "structmot/image.hpp"

namespace structmot {

// Where a sequence's inputs live. Only det_path is mandatory; tracking runs
// from detections alone and degrades to motion-only when images are missing.
struct SequenceSource {
  std::filesystem::path det_path;
  std::optional<std::filesystem::path> gt_path;
  std::optional<std::filesystem::path> image_dir;
  std::string image_pattern = "%06d.jpg";
  int frame_count = 0;                        // 0 = derive from detections
  std::optional<std::pair<int, int>> image_size;  // (width, height)
};

// One output row: frame,id,left,top,width,height,conf,-1,-1,-1.
struct ResultRecord {
  int frame = 0;
  std::int64_t track_id = 0;
  BBox bbox;
  double confidence = 0.0;
};

struct GtEntry {
  int frame = 0;
  std::int64_t track_id = 0;
  BBox bbox;
  bool considered = true;
};

// Detections grouped by frame; rows with non-positive box sizes are dropped
// and reported in `warnings`.
struct DetFile {
  std::map<int, std::vector<Detection>> frames;
  std::vector<std::string> warnings;
  int max_frame = 0;
};

struct GtFile {
  std::map<int, std::vector<GtEntry>> frames;
  std::vector<std::string> warnings;
  int max_frame = 0;
};

// Sequence metadata in seqinfo.ini style ([Sequence] section, key=value).
struct SequenceInfo {
  int im_width = 0;
  int im_height = 0;
  int seq_length = 0;
  double frame_rate = 0.0;
  std::string im_dir;
  std::string im_ext;
};

DetFile parse_det_file(const std::filesystem::path& path);
GtFile parse_gt_file(const std::filesystem::path& path);
std::vector<ResultRecord> parse_result_file(const std::filesystem::path& path);
SequenceInfo parse_seqinfo(const std::filesystem::path& path);

// Writes records in (frame, track_id) order with two-decimal geometry.
// Byte-stable for identical input.
void write_results(const std::vector<ResultRecord>& records, const std::filesystem::path& path);
std::string format_results(std::vector<ResultRecord> records);

// Decoded image for one frame, or nullopt when the file is missing/undecodable
// (the tracker then runs motion-only for that frame).
std::optional<FrameImage> load_frame(const SequenceSource& source, int frame);

}  // namespace structmot
