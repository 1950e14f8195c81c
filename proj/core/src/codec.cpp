#include "tsel/codec.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "tsel/errors.hpp"

namespace tsel {

namespace {

void check_frame(std::span<const float> frame, int width, int height) {
  if (width % kPatchSide != 0 || height % kPatchSide != 0) {
    throw Error("frame dimensions must be multiples of the patch side");
  }
  if (frame.size() != static_cast<std::size_t>(width) * height * 2) {
    throw Error("frame size does not match dimensions");
  }
  for (float v : frame) {
    if (!std::isfinite(v)) throw NonFiniteInput("flow frame contains non-finite values");
  }
}

// Gathers the patch at grid cell (gx, gy) into a length-32 vector:
// row-major pixels, (dx, dy) interleaved.
void gather_patch(std::span<const float> frame, int width, int gx, int gy, double* out) {
  int idx = 0;
  for (int r = 0; r < kPatchSide; ++r) {
    for (int c = 0; c < kPatchSide; ++c) {
      const std::size_t px =
          (static_cast<std::size_t>(gy * kPatchSide + r) * width + gx * kPatchSide + c) * 2;
      out[idx++] = frame[px];
      out[idx++] = frame[px + 1];
    }
  }
}

void affine(const std::vector<double>& w, const std::vector<double>& b, const double* x, int in,
            int out, double* y) {
  for (int i = 0; i < out; ++i) {
    double acc = b[static_cast<std::size_t>(i)];
    const double* row = w.data() + static_cast<std::size_t>(i) * in;
    for (int j = 0; j < in; ++j) acc += row[j] * x[j];
    y[i] = acc;
  }
}

struct PatchForward {
  std::vector<double> x;       // input patch
  std::vector<double> h;       // tanh(enc_w1 x + enc_b1)
  std::vector<double> z;       // encoder latent
  int code = 0;
  std::vector<double> g;       // tanh(dec_w1 z_q + dec_b1)
  std::vector<double> xhat;    // reconstruction
};

int nearest_entry(const Codebook& cb, const double* z, double* best_dist = nullptr,
                  double* second_dist = nullptr) {
  int best = 0;
  double d1 = std::numeric_limits<double>::infinity();
  double d2 = std::numeric_limits<double>::infinity();
  for (int k = 0; k < cb.entry_count; ++k) {
    const double* e = cb.vectors.data() + static_cast<std::size_t>(k) * cb.dim;
    double d = 0.0;
    for (int j = 0; j < cb.dim; ++j) {
      double diff = z[j] - e[j];
      d += diff * diff;
    }
    if (d < d1) {
      d2 = d1;
      d1 = d;
      best = k;
    } else if (d < d2) {
      d2 = d;
    }
  }
  if (best_dist) *best_dist = d1;
  if (second_dist) *second_dist = d2;
  return best;
}

PatchForward forward_patch(std::span<const float> frame, int width, int gx, int gy,
                           const CodecParams& p) {
  PatchForward f;
  f.x.resize(static_cast<std::size_t>(p.input_dim));
  gather_patch(frame, width, gx, gy, f.x.data());

  f.h.resize(static_cast<std::size_t>(p.hidden_dim));
  affine(p.enc_w1, p.enc_b1, f.x.data(), p.input_dim, p.hidden_dim, f.h.data());
  for (auto& v : f.h) v = std::tanh(v);

  f.z.resize(static_cast<std::size_t>(p.latent_dim));
  affine(p.enc_w2, p.enc_b2, f.h.data(), p.hidden_dim, p.latent_dim, f.z.data());

  f.code = nearest_entry(p.codebook, f.z.data());
  const double* e =
      p.codebook.vectors.data() + static_cast<std::size_t>(f.code) * p.codebook.dim;

  f.g.resize(static_cast<std::size_t>(p.hidden_dim));
  affine(p.dec_w1, p.dec_b1, e, p.latent_dim, p.hidden_dim, f.g.data());
  for (auto& v : f.g) v = std::tanh(v);

  f.xhat.resize(static_cast<std::size_t>(p.input_dim));
  affine(p.dec_w2, p.dec_b2, f.g.data(), p.hidden_dim, p.input_dim, f.xhat.data());
  return f;
}

CodecGrads zero_grads(const CodecParams& p) {
  CodecGrads g;
  g.enc_w1.assign(p.enc_w1.size(), 0.0);
  g.enc_b1.assign(p.enc_b1.size(), 0.0);
  g.enc_w2.assign(p.enc_w2.size(), 0.0);
  g.enc_b2.assign(p.enc_b2.size(), 0.0);
  g.dec_w1.assign(p.dec_w1.size(), 0.0);
  g.dec_b1.assign(p.dec_b1.size(), 0.0);
  g.dec_w2.assign(p.dec_w2.size(), 0.0);
  g.dec_b2.assign(p.dec_b2.size(), 0.0);
  g.codebook.assign(p.codebook.vectors.size(), 0.0);
  return g;
}

// Backpropagates one patch into grads. `straight_through` selects the
// training rule; otherwise the true gradient of the numeric loss is formed.
void backward_patch(const PatchForward& f, const CodecParams& p, int patch_count,
                    bool straight_through, CodecGrads& grads) {
  const int in = p.input_dim;
  const int hid = p.hidden_dim;
  const int lat = p.latent_dim;
  const double* e = p.codebook.vectors.data() + static_cast<std::size_t>(f.code) * lat;
  const double recon_scale = 2.0 / (static_cast<double>(patch_count) * in);
  const double q_scale = 2.0 / static_cast<double>(patch_count);

  // Decoder backprop from reconstruction error.
  std::vector<double> d_xhat(static_cast<std::size_t>(in));
  for (int i = 0; i < in; ++i) d_xhat[static_cast<std::size_t>(i)] = recon_scale * (f.xhat[static_cast<std::size_t>(i)] - f.x[static_cast<std::size_t>(i)]);

  std::vector<double> d_g(static_cast<std::size_t>(hid), 0.0);
  for (int i = 0; i < in; ++i) {
    const double di = d_xhat[static_cast<std::size_t>(i)];
    double* wrow = grads.dec_w2.data() + static_cast<std::size_t>(i) * hid;
    const double* prow = p.dec_w2.data() + static_cast<std::size_t>(i) * hid;
    for (int j = 0; j < hid; ++j) {
      wrow[j] += di * f.g[static_cast<std::size_t>(j)];
      d_g[static_cast<std::size_t>(j)] += prow[j] * di;
    }
    grads.dec_b2[static_cast<std::size_t>(i)] += di;
  }

  std::vector<double> d_zq(static_cast<std::size_t>(lat), 0.0);
  for (int j = 0; j < hid; ++j) {
    const double da = d_g[static_cast<std::size_t>(j)] * (1.0 - f.g[static_cast<std::size_t>(j)] * f.g[static_cast<std::size_t>(j)]);
    double* wrow = grads.dec_w1.data() + static_cast<std::size_t>(j) * lat;
    const double* prow = p.dec_w1.data() + static_cast<std::size_t>(j) * lat;
    for (int k = 0; k < lat; ++k) {
      wrow[k] += da * e[k];
      d_zq[static_cast<std::size_t>(k)] += prow[k] * da;
    }
    grads.dec_b1[static_cast<std::size_t>(j)] += da;
  }

  // Split at the quantization step.
  std::vector<double> d_z(static_cast<std::size_t>(lat), 0.0);
  double* e_grad = grads.codebook.data() + static_cast<std::size_t>(f.code) * lat;
  if (straight_through) {
    for (int k = 0; k < lat; ++k) {
      const double diff = f.z[static_cast<std::size_t>(k)] - e[k];
      d_z[static_cast<std::size_t>(k)] = d_zq[static_cast<std::size_t>(k)] + p.beta * q_scale * diff;
      e_grad[k] += q_scale * (e[k] - f.z[static_cast<std::size_t>(k)]);
    }
  } else {
    const double both = (1.0 + p.beta) * q_scale;
    for (int k = 0; k < lat; ++k) {
      const double diff = f.z[static_cast<std::size_t>(k)] - e[k];
      d_z[static_cast<std::size_t>(k)] = both * diff;
      e_grad[k] += d_zq[static_cast<std::size_t>(k)] - both * diff;
    }
  }

  // Encoder backprop.
  std::vector<double> d_h(static_cast<std::size_t>(hid), 0.0);
  for (int k = 0; k < lat; ++k) {
    const double dk = d_z[static_cast<std::size_t>(k)];
    double* wrow = grads.enc_w2.data() + static_cast<std::size_t>(k) * hid;
    const double* prow = p.enc_w2.data() + static_cast<std::size_t>(k) * hid;
    for (int j = 0; j < hid; ++j) {
      wrow[j] += dk * f.h[static_cast<std::size_t>(j)];
      d_h[static_cast<std::size_t>(j)] += prow[j] * dk;
    }
    grads.enc_b2[static_cast<std::size_t>(k)] += dk;
  }
  for (int j = 0; j < hid; ++j) {
    const double da = d_h[static_cast<std::size_t>(j)] * (1.0 - f.h[static_cast<std::size_t>(j)] * f.h[static_cast<std::size_t>(j)]);
    double* wrow = grads.enc_w1.data() + static_cast<std::size_t>(j) * in;
    for (int i = 0; i < in; ++i) wrow[i] += da * f.x[static_cast<std::size_t>(i)];
    grads.enc_b1[static_cast<std::size_t>(j)] += da;
  }
}

LossTerms accumulate_loss(const PatchForward& f, const CodecParams& p, int patch_count,
                          LossTerms terms) {
  const double* e = p.codebook.vectors.data() + static_cast<std::size_t>(f.code) * p.latent_dim;
  double recon = 0.0;
  for (int i = 0; i < p.input_dim; ++i) {
    const double d = f.xhat[static_cast<std::size_t>(i)] - f.x[static_cast<std::size_t>(i)];
    recon += d * d;
  }
  double qerr = 0.0;
  for (int k = 0; k < p.latent_dim; ++k) {
    const double d = f.z[static_cast<std::size_t>(k)] - e[k];
    qerr += d * d;
  }
  terms.recon_mse += recon / (static_cast<double>(patch_count) * p.input_dim);
  terms.codebook_term += qerr / patch_count;
  terms.commitment_term += qerr / patch_count;
  return terms;
}

CodecGrads gradients_impl(std::span<const float> frame, int width, int height,
                          const CodecParams& p, bool straight_through, LossTerms* terms_out,
                          std::vector<int>* codes_out = nullptr) {
  check_frame(frame, width, height);
  const int gw = width / kPatchSide;
  const int gh = height / kPatchSide;
  const int patch_count = gw * gh;
  CodecGrads grads = zero_grads(p);
  LossTerms terms;
  if (codes_out) codes_out->clear();
  for (int gy = 0; gy < gh; ++gy) {
    for (int gx = 0; gx < gw; ++gx) {
      PatchForward f = forward_patch(frame, width, gx, gy, p);
      backward_patch(f, p, patch_count, straight_through, grads);
      if (terms_out) terms = accumulate_loss(f, p, patch_count, terms);
      if (codes_out) codes_out->push_back(f.code);
    }
  }
  if (terms_out) {
    terms.total = terms.recon_mse + terms.codebook_term + p.beta * terms.commitment_term;
    *terms_out = terms;
  }
  return grads;
}

}  // namespace

CodecParams init_codec_params(int input_dim, int hidden_dim, int latent_dim, int codebook_entries,
                              double beta, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto fill = [&rng](std::vector<double>& v, std::size_t n, double scale) {
    std::uniform_real_distribution<double> dist(-scale, scale);
    v.resize(n);
    for (auto& x : v) x = dist(rng);
  };
  CodecParams p;
  p.input_dim = input_dim;
  p.hidden_dim = hidden_dim;
  p.latent_dim = latent_dim;
  p.beta = beta;
  fill(p.enc_w1, static_cast<std::size_t>(hidden_dim) * input_dim, 1.0 / std::sqrt(input_dim));
  fill(p.enc_b1, static_cast<std::size_t>(hidden_dim), 0.1);
  fill(p.enc_w2, static_cast<std::size_t>(latent_dim) * hidden_dim, 1.0 / std::sqrt(hidden_dim));
  fill(p.enc_b2, static_cast<std::size_t>(latent_dim), 0.1);
  fill(p.dec_w1, static_cast<std::size_t>(hidden_dim) * latent_dim, 1.0 / std::sqrt(latent_dim));
  fill(p.dec_b1, static_cast<std::size_t>(hidden_dim), 0.1);
  fill(p.dec_w2, static_cast<std::size_t>(input_dim) * hidden_dim, 1.0 / std::sqrt(hidden_dim));
  fill(p.dec_b2, static_cast<std::size_t>(input_dim), 0.1);
  p.codebook.entry_count = codebook_entries;
  p.codebook.dim = latent_dim;
  fill(p.codebook.vectors, static_cast<std::size_t>(codebook_entries) * latent_dim, 0.3);
  return p;
}

LatentGrid encode(std::span<const float> frame, int width, int height, const CodecParams& p) {
  check_frame(frame, width, height);
  LatentGrid grid;
  grid.grid_w = width / kPatchSide;
  grid.grid_h = height / kPatchSide;
  grid.dim = p.latent_dim;
  grid.values.resize(static_cast<std::size_t>(grid.cells()) * p.latent_dim);

  std::vector<double> x(static_cast<std::size_t>(p.input_dim));
  std::vector<double> h(static_cast<std::size_t>(p.hidden_dim));
  for (int gy = 0; gy < grid.grid_h; ++gy) {
    for (int gx = 0; gx < grid.grid_w; ++gx) {
      gather_patch(frame, width, gx, gy, x.data());
      affine(p.enc_w1, p.enc_b1, x.data(), p.input_dim, p.hidden_dim, h.data());
      for (auto& v : h) v = std::tanh(v);
      double* z = grid.values.data() +
                  static_cast<std::size_t>(gy * grid.grid_w + gx) * p.latent_dim;
      affine(p.enc_w2, p.enc_b2, h.data(), p.hidden_dim, p.latent_dim, z);
    }
  }
  return grid;
}

QuantizeResult quantize(const LatentGrid& latents, const Codebook& codebook) {
  if (latents.dim != codebook.dim) throw Error("latent/codebook dimension mismatch");
  QuantizeResult result;
  result.codes.grid_w = latents.grid_w;
  result.codes.grid_h = latents.grid_h;
  result.quantized = latents;
  result.codes.indices.resize(static_cast<std::size_t>(latents.cells()));
  for (int i = 0; i < latents.cells(); ++i) {
    const double* z = latents.values.data() + static_cast<std::size_t>(i) * latents.dim;
    const int k = nearest_entry(codebook, z);
    result.codes.indices[static_cast<std::size_t>(i)] = k;
    const double* e = codebook.vectors.data() + static_cast<std::size_t>(k) * codebook.dim;
    std::copy(e, e + codebook.dim,
              result.quantized.values.data() + static_cast<std::size_t>(i) * latents.dim);
  }
  return result;
}

std::vector<float> decode(const LatentGrid& quantized, int width, int height,
                          const CodecParams& p) {
  if (quantized.grid_w * kPatchSide != width || quantized.grid_h * kPatchSide != height) {
    throw Error("latent grid does not match frame dimensions");
  }
  std::vector<float> frame(static_cast<std::size_t>(width) * height * 2, 0.0f);
  std::vector<double> g(static_cast<std::size_t>(p.hidden_dim));
  std::vector<double> xhat(static_cast<std::size_t>(p.input_dim));
  for (int gy = 0; gy < quantized.grid_h; ++gy) {
    for (int gx = 0; gx < quantized.grid_w; ++gx) {
      const double* z = quantized.values.data() +
                        static_cast<std::size_t>(gy * quantized.grid_w + gx) * p.latent_dim;
      affine(p.dec_w1, p.dec_b1, z, p.latent_dim, p.hidden_dim, g.data());
      for (auto& v : g) v = std::tanh(v);
      affine(p.dec_w2, p.dec_b2, g.data(), p.hidden_dim, p.input_dim, xhat.data());
      int idx = 0;
      for (int r = 0; r < kPatchSide; ++r) {
        for (int c = 0; c < kPatchSide; ++c) {
          const std::size_t px =
              (static_cast<std::size_t>(gy * kPatchSide + r) * width + gx * kPatchSide + c) * 2;
          frame[px] = static_cast<float>(xhat[static_cast<std::size_t>(idx++)]);
          frame[px + 1] = static_cast<float>(xhat[static_cast<std::size_t>(idx++)]);
        }
      }
    }
  }
  return frame;
}

LossTerms loss(std::span<const float> frame, int width, int height, const CodecParams& p) {
  check_frame(frame, width, height);
  const int gw = width / kPatchSide;
  const int gh = height / kPatchSide;
  const int patch_count = gw * gh;
  LossTerms terms;
  for (int gy = 0; gy < gh; ++gy) {
    for (int gx = 0; gx < gw; ++gx) {
      PatchForward f = forward_patch(frame, width, gx, gy, p);
      terms = accumulate_loss(f, p, patch_count, terms);
    }
  }
  terms.total = terms.recon_mse + terms.codebook_term + p.beta * terms.commitment_term;
  return terms;
}

CodecGrads loss_gradients(std::span<const float> frame, int width, int height,
                          const CodecParams& p) {
  return gradients_impl(frame, width, height, p, /*straight_through=*/false, nullptr);
}

CodecGrads training_gradients(std::span<const float> frame, int width, int height,
                              const CodecParams& p, LossTerms* terms, std::vector<int>* codes) {
  return gradients_impl(frame, width, height, p, /*straight_through=*/true, terms, codes);
}

double quantization_margin(std::span<const float> frame, int width, int height,
                           const CodecParams& p) {
  check_frame(frame, width, height);
  const int gw = width / kPatchSide;
  const int gh = height / kPatchSide;
  double margin = std::numeric_limits<double>::infinity();
  for (int gy = 0; gy < gh; ++gy) {
    for (int gx = 0; gx < gw; ++gx) {
      PatchForward f = forward_patch(frame, width, gx, gy, p);
      double d1 = 0.0, d2 = 0.0;
      nearest_entry(p.codebook, f.z.data(), &d1, &d2);
      margin = std::min(margin, d2 - d1);
    }
  }
  return margin;
}

namespace {

void axpy(std::vector<double>& param, const std::vector<double>& grad, double step) {
  for (std::size_t i = 0; i < param.size(); ++i) param[i] -= step * grad[i];
}

void add_into(std::vector<double>& acc, const std::vector<double>& g) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += g[i];
}

void snap_to_float(std::vector<double>& v) {
  for (auto& x : v) x = static_cast<double>(static_cast<float>(x));
}

}  // namespace

TrainResult train(const std::vector<std::vector<float>>& frames, const TrainOptions& options) {
  if (frames.empty()) throw EmptyDataset();
  std::mt19937_64 rng(options.seed);
  CodecParams p = init_codec_params(kPatchDim, options.hidden_dim, kLatentDim, kCodebookSize,
                                    options.beta, rng());

  TrainResult result;
  // Evaluation pass at initialization, before any update.
  for (const auto& frame : frames)
    result.initial_recon_mse += loss(frame, kFlowFrameSide, kFlowFrameSide, p).recon_mse;
  result.initial_recon_mse /= static_cast<double>(frames.size());

  std::vector<std::size_t> order(frames.size());
  std::iota(order.begin(), order.end(), 0);

  for (int epoch = 0; epoch < options.epochs; ++epoch) {
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<char> used(static_cast<std::size_t>(p.codebook.entry_count), 0);
    double epoch_recon = 0.0;
    std::size_t seen = 0;

    for (std::size_t start = 0; start < order.size(); start += static_cast<std::size_t>(options.batch_size)) {
      const std::size_t end = std::min(order.size(), start + static_cast<std::size_t>(options.batch_size));
      CodecGrads batch = zero_grads(p);
      std::vector<int> codes;
      for (std::size_t s = start; s < end; ++s) {
        const auto& frame = frames[order[s]];
        LossTerms terms;
        CodecGrads g = training_gradients(frame, kFlowFrameSide, kFlowFrameSide, p, &terms, &codes);
        add_into(batch.enc_w1, g.enc_w1);
        add_into(batch.enc_b1, g.enc_b1);
        add_into(batch.enc_w2, g.enc_w2);
        add_into(batch.enc_b2, g.enc_b2);
        add_into(batch.dec_w1, g.dec_w1);
        add_into(batch.dec_b1, g.dec_b1);
        add_into(batch.dec_w2, g.dec_w2);
        add_into(batch.dec_b2, g.dec_b2);
        add_into(batch.codebook, g.codebook);
        epoch_recon += terms.recon_mse;
        ++seen;
        for (int idx : codes) used[static_cast<std::size_t>(idx)] = 1;
      }
      const double step = options.learning_rate / static_cast<double>(end - start);
      axpy(p.enc_w1, batch.enc_w1, step);
      axpy(p.enc_b1, batch.enc_b1, step);
      axpy(p.enc_w2, batch.enc_w2, step);
      axpy(p.enc_b2, batch.enc_b2, step);
      axpy(p.dec_w1, batch.dec_w1, step);
      axpy(p.dec_b1, batch.dec_b1, step);
      axpy(p.dec_w2, batch.dec_w2, step);
      axpy(p.dec_b2, batch.dec_b2, step);
      axpy(p.codebook.vectors, batch.codebook, step);
    }

    result.epoch_recon_mse.push_back(epoch_recon / static_cast<double>(seen));

    // Re-seed entries unused for a full epoch to a random training latent.
    for (int k = 0; k < p.codebook.entry_count; ++k) {
      if (used[static_cast<std::size_t>(k)]) continue;
      const auto& frame = frames[rng() % frames.size()];
      auto latents = encode(frame, kFlowFrameSide, kFlowFrameSide, p);
      const int cell = static_cast<int>(rng() % static_cast<std::uint64_t>(latents.cells()));
      auto z = latents.cell(cell);
      std::copy(z.begin(), z.end(),
                p.codebook.vectors.begin() + static_cast<std::size_t>(k) * p.codebook.dim);
    }
  }

  // Snap to float32 so the on-disk representation round-trips exactly.
  snap_to_float(p.enc_w1);
  snap_to_float(p.enc_b1);
  snap_to_float(p.enc_w2);
  snap_to_float(p.enc_b2);
  snap_to_float(p.dec_w1);
  snap_to_float(p.dec_b1);
  snap_to_float(p.dec_w2);
  snap_to_float(p.dec_b2);
  snap_to_float(p.codebook.vectors);

  result.final_recon_mse = result.epoch_recon_mse.back();
  result.params = std::move(p);
  return result;
}

double codebook_usage(const std::vector<std::vector<float>>& frames, const CodecParams& p) {
  if (frames.empty()) throw EmptyDataset();
  std::vector<char> used(static_cast<std::size_t>(p.codebook.entry_count), 0);
  for (const auto& frame : frames) {
    auto latents = encode(frame, kFlowFrameSide, kFlowFrameSide, p);
    auto q = quantize(latents, p.codebook);
    for (int idx : q.codes.indices) used[static_cast<std::size_t>(idx)] = 1;
  }
  const auto count = std::count(used.begin(), used.end(), 1);
  return static_cast<double>(count) / static_cast<double>(p.codebook.entry_count);
}

}  // namespace tsel
