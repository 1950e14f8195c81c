#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace tsel {

inline constexpr int kCodebookSize = 64;
inline constexpr int kFlowFrameSide = 32;
inline constexpr int kLatentDim = 8;
inline constexpr int kPatchSide = 4;
inline constexpr int kPatchDim = kPatchSide * kPatchSide * 2;  // 4x4 px, 2 channels

/// Learned discrete latent vectors; quantization target of the encoder.
struct Codebook {
  int entry_count = kCodebookSize;
  int dim = kLatentDim;
  std::vector<double> vectors;  // entry_count * dim, row-major

  std::span<const double> entry(int k) const {
    return {vectors.data() + static_cast<std::size_t>(k) * dim, static_cast<std::size_t>(dim)};
  }
};

/// Patchwise MLP encoder/decoder weights plus the codebook.
/// Encoder: patch_dim -> hidden (tanh) -> latent. Decoder mirrors it.
struct CodecParams {
  int input_dim = kPatchDim;
  int hidden_dim = 16;
  int latent_dim = kLatentDim;
  std::vector<double> enc_w1, enc_b1;  // hidden x input, hidden
  std::vector<double> enc_w2, enc_b2;  // latent x hidden, latent
  std::vector<double> dec_w1, dec_b1;  // hidden x latent, hidden
  std::vector<double> dec_w2, dec_b2;  // input x hidden, input
  Codebook codebook;
  double beta = 0.25;
};

/// Fresh randomly initialized parameters (seeded, deterministic).
CodecParams init_codec_params(int input_dim, int hidden_dim, int latent_dim, int codebook_entries,
                              double beta, std::uint64_t seed);

/// Per-patch encoder outputs on a grid_w x grid_h grid of 4x4 patches.
struct LatentGrid {
  int grid_w = 0;
  int grid_h = 0;
  int dim = kLatentDim;
  std::vector<double> values;  // grid cells * dim, row-major over cells

  std::span<const double> cell(int i) const {
    return {values.data() + static_cast<std::size_t>(i) * dim, static_cast<std::size_t>(dim)};
  }
  int cells() const { return grid_w * grid_h; }
};

/// Codebook index per patch.
struct CodeGrid {
  int grid_w = 0;
  int grid_h = 0;
  std::vector<int> indices;
};

/// A single flow frame of width x height px with interleaved (dx, dy).
LatentGrid encode(std::span<const float> frame, int width, int height, const CodecParams& params);

/// Nearest-codebook-entry assignment; ties break toward the lower index.
struct QuantizeResult {
  CodeGrid codes;
  LatentGrid quantized;
};
QuantizeResult quantize(const LatentGrid& latents, const Codebook& codebook);

std::vector<float> decode(const LatentGrid& quantized, int width, int height,
                          const CodecParams& params);

struct LossTerms {
  double total = 0.0;
  double recon_mse = 0.0;
  double codebook_term = 0.0;
  double commitment_term = 0.0;
};
LossTerms loss(std::span<const float> frame, int width, int height, const CodecParams& params);

/// Gradient of every parameter, same shapes as CodecParams.
struct CodecGrads {
  std::vector<double> enc_w1, enc_b1, enc_w2, enc_b2;
  std::vector<double> dec_w1, dec_b1, dec_w2, dec_b2;
  std::vector<double> codebook;
};

/// True analytic gradient of loss().total (quantization assignments held
/// fixed); matches central finite differences away from decision boundaries.
CodecGrads loss_gradients(std::span<const float> frame, int width, int height,
                          const CodecParams& params);

/// Training gradient: straight-through estimator for the encoder, codebook
/// updated only by the codebook loss term.
CodecGrads training_gradients(std::span<const float> frame, int width, int height,
                              const CodecParams& params, LossTerms* terms = nullptr,
                              std::vector<int>* codes = nullptr);

/// Smallest gap between best and second-best codebook distance across
/// patches; used to skip finite-difference checks near decision boundaries.
double quantization_margin(std::span<const float> frame, int width, int height,
                           const CodecParams& params);

struct TrainOptions {
  int epochs = 40;
  double learning_rate = 0.5;
  double beta = 0.25;
  int batch_size = 32;
  int hidden_dim = 16;
  std::uint64_t seed = 0;
};

struct TrainResult {
  CodecParams params;
  double initial_recon_mse = 0.0;  // evaluated at initialization, pre-update
  double final_recon_mse = 0.0;
  std::vector<double> epoch_recon_mse;
};

/// SGD over 32x32x2 flow frames. Deterministic for a fixed seed.
TrainResult train(const std::vector<std::vector<float>>& frames, const TrainOptions& options);

/// Fraction of codebook entries assigned at least once over the dataset.
double codebook_usage(const std::vector<std::vector<float>>& frames, const CodecParams& params);

}  // namespace tsel
