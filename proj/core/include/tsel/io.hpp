#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "tsel/codec.hpp"
#include "tsel/fusion.hpp"
#include "tsel/histogram.hpp"
#include "tsel/sim.hpp"

namespace tsel {

// Flow container: magic "FLV1", little-endian u32 width, height, frame_count,
// then frame-major, row-major, (dx, dy) interleaved 32-bit LE floats.
void save_flow_video(const FlowVideo& video, const std::filesystem::path& path);
FlowVideo load_flow_video(const std::filesystem::path& path);

// Appearance container: same layout with magic "APP1" and one channel.
void save_appearance(const std::vector<AppearanceFrame>& frames, const std::filesystem::path& path);
std::vector<AppearanceFrame> load_appearance(const std::filesystem::path& path);

// Codec container: magic "VQC1", LE u32 K, D, input_dim, hidden_dim, then
// f32 beta and the weight tensors in declaration order, codebook last.
void save_codec_params(const CodecParams& params, const std::filesystem::path& path);
CodecParams load_codec_params(const std::filesystem::path& path);

// Demo corpus directory layout: one subdirectory per record holding
// flow.flv1, appearance.app1 and meta.json {text, objects, expert}.
void save_demo_corpus(const std::vector<DemoRecord>& corpus, const std::filesystem::path& dir);
std::vector<DemoRecord> load_demo_corpus(const std::filesystem::path& dir);

// Histogram CSV: header row of bin indices, one line of 64 fractions per video.
void save_histogram_csv(const std::vector<FlowHistogram>& histograms,
                        const std::filesystem::path& path);
std::vector<FlowHistogram> load_histogram_csv(const std::filesystem::path& path);

// Template library JSON: [{id, trajectory, force, descriptor_template}].
void save_library_json(const std::vector<Template>& library, const std::filesystem::path& path);
std::vector<Template> load_library_json(const std::filesystem::path& path);

std::string selection_report_to_json(const SelectionReport& report);
void save_selection_report(const SelectionReport& report, const std::filesystem::path& path);

/// Writes content to a temp file in the same directory, then renames.
void atomic_write(const std::filesystem::path& path, const std::string& content);

}  // namespace tsel
