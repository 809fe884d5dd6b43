#include "structmot/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <opencv2/imgcodecs.hpp>

#include "structmot/errors.hpp"

namespace structmot {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(trim(field));
  return out;
}

double parse_real(const std::string& s, int line_no, const char* what) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(std::string("invalid ") + what + " value '" + s + "'", line_no);
  }
}

int parse_int(const std::string& s, int line_no, const char* what) {
  const double v = parse_real(s, line_no, what);
  return static_cast<int>(v);
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return in;
}

}  // namespace

DetFile parse_det_file(const std::filesystem::path& path) {
  std::ifstream in = open_or_throw(path);
  DetFile out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto f = split_csv(t);
    if (f.size() < 7) throw ParseError("expected at least 7 CSV fields, got " + std::to_string(f.size()), line_no);
    Detection d;
    d.frame = parse_int(f[0], line_no, "frame");
    d.bbox = {parse_real(f[2], line_no, "left"), parse_real(f[3], line_no, "top"),
              parse_real(f[4], line_no, "width"), parse_real(f[5], line_no, "height")};
    d.confidence = parse_real(f[6], line_no, "confidence");
    if (d.frame < 1) throw ParseError("frame index must be >= 1", line_no);
    if (!d.bbox.valid()) {
      out.warnings.push_back("line " + std::to_string(line_no) +
                             ": dropped detection with non-positive box size");
      continue;
    }
    d.detection_id = static_cast<int>(out.frames[d.frame].size());
    out.frames[d.frame].push_back(d);
    out.max_frame = std::max(out.max_frame, d.frame);
  }
  return out;
}

GtFile parse_gt_file(const std::filesystem::path& path) {
  std::ifstream in = open_or_throw(path);
  GtFile out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto f = split_csv(t);
    if (f.size() < 7) throw ParseError("expected at least 7 CSV fields, got " + std::to_string(f.size()), line_no);
    GtEntry e;
    e.frame = parse_int(f[0], line_no, "frame");
    e.track_id = parse_int(f[1], line_no, "id");
    e.bbox = {parse_real(f[2], line_no, "left"), parse_real(f[3], line_no, "top"),
              parse_real(f[4], line_no, "width"), parse_real(f[5], line_no, "height")};
    e.considered = parse_real(f[6], line_no, "flag") != 0.0;
    if (e.frame < 1) throw ParseError("frame index must be >= 1", line_no);
    if (!e.bbox.valid()) {
      out.warnings.push_back("line " + std::to_string(line_no) +
                             ": dropped ground-truth box with non-positive size");
      continue;
    }
    out.frames[e.frame].push_back(e);
    out.max_frame = std::max(out.max_frame, e.frame);
  }
  return out;
}

std::vector<ResultRecord> parse_result_file(const std::filesystem::path& path) {
  std::ifstream in = open_or_throw(path);
  std::vector<ResultRecord> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto f = split_csv(t);
    if (f.size() < 7) throw ParseError("expected at least 7 CSV fields, got " + std::to_string(f.size()), line_no);
    ResultRecord r;
    r.frame = parse_int(f[0], line_no, "frame");
    r.track_id = parse_int(f[1], line_no, "id");
    r.bbox = {parse_real(f[2], line_no, "left"), parse_real(f[3], line_no, "top"),
              parse_real(f[4], line_no, "width"), parse_real(f[5], line_no, "height")};
    r.confidence = parse_real(f[6], line_no, "confidence");
    out.push_back(r);
  }
  return out;
}

SequenceInfo parse_seqinfo(const std::filesystem::path& path) {
  std::ifstream in = open_or_throw(path);
  SequenceInfo info;
  std::string line;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (t.empty() || t[0] == '[' || t[0] == ';' || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) continue;
    const std::string key = trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));
    if (key == "imWidth")
      info.im_width = std::stoi(value);
    else if (key == "imHeight")
      info.im_height = std::stoi(value);
    else if (key == "seqLength")
      info.seq_length = std::stoi(value);
    else if (key == "frameRate")
      info.frame_rate = std::stod(value);
    else if (key == "imDir")
      info.im_dir = value;
    else if (key == "imExt")
      info.im_ext = value;
  }
  return info;
}

std::string format_results(std::vector<ResultRecord> records) {
  std::sort(records.begin(), records.end(), [](const ResultRecord& a, const ResultRecord& b) {
    return std::tie(a.frame, a.track_id) < std::tie(b.frame, b.track_id);
  });
  std::string out;
  char buf[160];
  for (const auto& r : records) {
    std::snprintf(buf, sizeof(buf), "%d,%lld,%.2f,%.2f,%.2f,%.2f,%.2f,-1,-1,-1\n", r.frame,
                  static_cast<long long>(r.track_id), r.bbox.left, r.bbox.top, r.bbox.width,
                  r.bbox.height, r.confidence);
    out += buf;
  }
  return out;
}

void write_results(const std::vector<ResultRecord>& records, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << format_results(records);
  if (!out) throw IoError("write failed for " + path.string());
}

std::optional<FrameImage> load_frame(const SequenceSource& source, int frame) {
  if (!source.image_dir) return std::nullopt;
  char name[256];
  std::snprintf(name, sizeof(name), source.image_pattern.c_str(), frame);
  const std::filesystem::path file = *source.image_dir / name;
  std::error_code ec;
  if (!std::filesystem::exists(file, ec)) return std::nullopt;
  const cv::Mat bgr = cv::imread(file.string(), cv::IMREAD_COLOR);
  if (bgr.empty()) return std::nullopt;
  FrameImage img;
  img.width = bgr.cols;
  img.height = bgr.rows;
  img.rgb.resize(static_cast<std::size_t>(bgr.cols) * bgr.rows * 3);
  for (int y = 0; y < bgr.rows; ++y) {
    const cv::Vec3b* row = bgr.ptr<cv::Vec3b>(y);
    std::uint8_t* dst = img.rgb.data() + static_cast<std::size_t>(y) * bgr.cols * 3;
    for (int x = 0; x < bgr.cols; ++x) {
      dst[3 * x + 0] = row[x][2];
      dst[3 * x + 1] = row[x][1];
      dst[3 * x + 2] = row[x][0];
    }
  }
  return img;
}

}  // namespace structmot
