#include "tsel/io.hpp"

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "tsel/errors.hpp"

namespace tsel {

namespace {

void append_u32(std::string& out, std::uint32_t v) {
  char buf[4];
  buf[0] = static_cast<char>(v & 0xFF);
  buf[1] = static_cast<char>((v >> 8) & 0xFF);
  buf[2] = static_cast<char>((v >> 16) & 0xFF);
  buf[3] = static_cast<char>((v >> 24) & 0xFF);
  out.append(buf, 4);
}

void append_f32(std::string& out, float v) {
  std::uint32_t bits;
  std::memcpy(&bits, &v, 4);
  append_u32(out, bits);
}

class Reader {
 public:
  explicit Reader(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    data_ = ss.str();
  }
  std::uint32_t u32() {
    if (pos_ + 4 > data_.size()) throw IoError("truncated file");
    std::uint32_t v = static_cast<std::uint8_t>(data_[pos_]) |
                      (static_cast<std::uint32_t>(static_cast<std::uint8_t>(data_[pos_ + 1])) << 8) |
                      (static_cast<std::uint32_t>(static_cast<std::uint8_t>(data_[pos_ + 2])) << 16) |
                      (static_cast<std::uint32_t>(static_cast<std::uint8_t>(data_[pos_ + 3])) << 24);
    pos_ += 4;
    return v;
  }
  float f32() {
    const std::uint32_t bits = u32();
    float v;
    std::memcpy(&v, &bits, 4);
    return v;
  }
  void expect_magic(const char* magic) {
    if (pos_ + 4 > data_.size() || std::memcmp(data_.data() + pos_, magic, 4) != 0) {
      throw IoError(std::string("bad magic, expected ") + magic);
    }
    pos_ += 4;
  }

 private:
  std::string data_;
  std::size_t pos_ = 0;
};

void write_float_block(std::string& out, const std::vector<float>& values) {
  for (float v : values) append_f32(out, v);
}

void write_double_block_as_f32(std::string& out, const std::vector<double>& values) {
  for (double v : values) append_f32(out, static_cast<float>(v));
}

std::vector<double> read_doubles(Reader& r, std::size_t n) {
  std::vector<double> out(n);
  for (auto& v : out) v = static_cast<double>(r.f32());
  return out;
}

}  // namespace

void atomic_write(const std::filesystem::path& path, const std::string& content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw IoError("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

void save_flow_video(const FlowVideo& video, const std::filesystem::path& path) {
  std::string out = "FLV1";
  append_u32(out, video.width);
  append_u32(out, video.height);
  append_u32(out, static_cast<std::uint32_t>(video.frames.size()));
  for (const auto& frame : video.frames) {
    if (frame.size() != static_cast<std::size_t>(video.width) * video.height * 2) {
      throw IoError("flow frame size mismatch");
    }
    write_float_block(out, frame);
  }
  atomic_write(path, out);
}

FlowVideo load_flow_video(const std::filesystem::path& path) {
  Reader r(path);
  r.expect_magic("FLV1");
  FlowVideo video;
  video.width = r.u32();
  video.height = r.u32();
  const std::uint32_t frames = r.u32();
  const std::size_t per_frame = static_cast<std::size_t>(video.width) * video.height * 2;
  video.frames.resize(frames);
  for (auto& frame : video.frames) {
    frame.resize(per_frame);
    for (auto& v : frame) v = r.f32();
  }
  return video;
}

void save_appearance(const std::vector<AppearanceFrame>& frames,
                     const std::filesystem::path& path) {
  std::string out = "APP1";
  append_u32(out, kAppearanceSize);
  append_u32(out, kAppearanceSize);
  append_u32(out, static_cast<std::uint32_t>(frames.size()));
  for (const auto& frame : frames) {
    if (frame.size() != static_cast<std::size_t>(kAppearanceSize) * kAppearanceSize) {
      throw IoError("appearance frame size mismatch");
    }
    write_float_block(out, frame);
  }
  atomic_write(path, out);
}

std::vector<AppearanceFrame> load_appearance(const std::filesystem::path& path) {
  Reader r(path);
  r.expect_magic("APP1");
  const std::uint32_t width = r.u32();
  const std::uint32_t height = r.u32();
  const std::uint32_t count = r.u32();
  std::vector<AppearanceFrame> frames(count);
  for (auto& frame : frames) {
    frame.resize(static_cast<std::size_t>(width) * height);
    for (auto& v : frame) v = r.f32();
  }
  return frames;
}

void save_codec_params(const CodecParams& p, const std::filesystem::path& path) {
  std::string out = "VQC1";
  append_u32(out, static_cast<std::uint32_t>(p.codebook.entry_count));
  append_u32(out, static_cast<std::uint32_t>(p.codebook.dim));
  append_u32(out, static_cast<std::uint32_t>(p.input_dim));
  append_u32(out, static_cast<std::uint32_t>(p.hidden_dim));
  append_f32(out, static_cast<float>(p.beta));
  write_double_block_as_f32(out, p.enc_w1);
  write_double_block_as_f32(out, p.enc_b1);
  write_double_block_as_f32(out, p.enc_w2);
  write_double_block_as_f32(out, p.enc_b2);
  write_double_block_as_f32(out, p.dec_w1);
  write_double_block_as_f32(out, p.dec_b1);
  write_double_block_as_f32(out, p.dec_w2);
  write_double_block_as_f32(out, p.dec_b2);
  write_double_block_as_f32(out, p.codebook.vectors);
  atomic_write(path, out);
}

CodecParams load_codec_params(const std::filesystem::path& path) {
  Reader r(path);
  r.expect_magic("VQC1");
  CodecParams p;
  p.codebook.entry_count = static_cast<int>(r.u32());
  p.codebook.dim = static_cast<int>(r.u32());
  p.input_dim = static_cast<int>(r.u32());
  p.hidden_dim = static_cast<int>(r.u32());
  p.latent_dim = p.codebook.dim;
  p.beta = static_cast<double>(r.f32());
  const auto in = static_cast<std::size_t>(p.input_dim);
  const auto hid = static_cast<std::size_t>(p.hidden_dim);
  const auto lat = static_cast<std::size_t>(p.latent_dim);
  p.enc_w1 = read_doubles(r, hid * in);
  p.enc_b1 = read_doubles(r, hid);
  p.enc_w2 = read_doubles(r, lat * hid);
  p.enc_b2 = read_doubles(r, lat);
  p.dec_w1 = read_doubles(r, hid * lat);
  p.dec_b1 = read_doubles(r, hid);
  p.dec_w2 = read_doubles(r, in * hid);
  p.dec_b2 = read_doubles(r, in);
  p.codebook.vectors =
      read_doubles(r, static_cast<std::size_t>(p.codebook.entry_count) * p.codebook.dim);
  return p;
}

void save_demo_corpus(const std::vector<DemoRecord>& corpus, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof(name), "record_%04zu", i);
    const auto record_dir = dir / name;
    std::filesystem::create_directories(record_dir);
    save_flow_video(corpus[i].video, record_dir / "flow.flv1");
    save_appearance(corpus[i].appearance, record_dir / "appearance.app1");
    nlohmann::json meta = {{"text", corpus[i].text},
                           {"objects", corpus[i].objects},
                           {"expert", corpus[i].expert}};
    atomic_write(record_dir / "meta.json", meta.dump(2) + "\n");
  }
}

std::vector<DemoRecord> load_demo_corpus(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> record_dirs;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_directory()) record_dirs.push_back(entry.path());
  }
  std::sort(record_dirs.begin(), record_dirs.end());
  std::vector<DemoRecord> corpus;
  for (const auto& record_dir : record_dirs) {
    DemoRecord record;
    record.video = load_flow_video(record_dir / "flow.flv1");
    record.appearance = load_appearance(record_dir / "appearance.app1");
    std::ifstream meta_in(record_dir / "meta.json");
    if (!meta_in) throw IoError("missing meta.json in " + record_dir.string());
    nlohmann::json meta = nlohmann::json::parse(meta_in);
    record.text = meta.at("text").get<std::string>();
    record.objects = meta.at("objects").get<std::vector<std::string>>();
    record.expert = meta.at("expert").get<bool>();
    corpus.push_back(std::move(record));
  }
  return corpus;
}

void save_histogram_csv(const std::vector<FlowHistogram>& histograms,
                        const std::filesystem::path& path) {
  std::ostringstream out;
  for (int i = 0; i < kCodebookSize; ++i) out << (i ? "," : "") << "bin_" << i;
  out << "\n";
  out.precision(17);
  for (const auto& hist : histograms) {
    for (int i = 0; i < kCodebookSize; ++i) out << (i ? "," : "") << hist.bins[static_cast<std::size_t>(i)];
    out << "\n";
  }
  atomic_write(path, out.str());
}

std::vector<FlowHistogram> load_histogram_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line)) throw IoError("missing header in " + path.string());
  std::vector<FlowHistogram> histograms;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    FlowHistogram hist;
    std::istringstream ss(line);
    std::string cell;
    for (int i = 0; i < kCodebookSize; ++i) {
      if (!std::getline(ss, cell, ',')) throw IoError("short row in " + path.string());
      hist.bins[static_cast<std::size_t>(i)] = std::stod(cell);
    }
    hist.total_codes = 1;  // counts are not stored in the CSV
    histograms.push_back(hist);
  }
  return histograms;
}

void save_library_json(const std::vector<Template>& library, const std::filesystem::path& path) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& tmpl : library) {
    arr.push_back({{"id", tmpl.id},
                   {"trajectory", trajectory_token(tmpl.trajectory)},
                   {"force", force_token(tmpl.force)},
                   {"descriptor_template", tmpl.descriptor_template}});
  }
  atomic_write(path, arr.dump(2) + "\n");
}

std::vector<Template> load_library_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  nlohmann::json arr = nlohmann::json::parse(in);
  std::vector<Template> library;
  for (const auto& item : arr) {
    Template tmpl;
    tmpl.id = item.at("id").get<int>();
    tmpl.trajectory = trajectory_from_token(item.at("trajectory").get<std::string>());
    tmpl.force = force_from_token(item.at("force").get<std::string>());
    tmpl.descriptor_template = item.at("descriptor_template").get<std::string>();
    library.push_back(std::move(tmpl));
  }
  return library;
}

namespace {

nlohmann::json score_vector_to_json(const ScoreVector& sv) {
  nlohmann::json j = {{"ids", sv.ids},
                      {"scores", sv.scores},
                      {"higher_is_better", sv.higher_is_better}};
  if (sv.norm_min_max) {
    j["norm_min"] = sv.norm_min_max->first;
    j["norm_max"] = sv.norm_min_max->second;
  }
  return j;
}

}  // namespace

std::string selection_report_to_json(const SelectionReport& report) {
  nlohmann::json j = {
      {"skill",
       {{"verb", report.skill.verb},
        {"tool", report.skill.tool},
        {"recipient", report.skill.recipient}}},
      {"llm_scores", score_vector_to_json(report.llm_scores)},
      {"candidates", report.candidates},
      {"flow_scores", score_vector_to_json(report.flow_scores)},
      {"appearance_scores", score_vector_to_json(report.appearance_scores)},
      {"llm_normalized", score_vector_to_json(report.llm_normalized)},
      {"flow_normalized", score_vector_to_json(report.flow_normalized)},
      {"combined", score_vector_to_json(report.combined)},
      {"selected_id", report.selected_id},
      {"lambda", report.lambda},
      {"seeds", {{"episode", report.episode_seed}}},
  };
  return j.dump(2) + "\n";
}

void save_selection_report(const SelectionReport& report, const std::filesystem::path& path) {
  atomic_write(path, selection_report_to_json(report));
}

}  // namespace tsel
