#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "amptk/errors.hpp"
#include "amptk/types.hpp"

namespace amptk {

enum class Activation { Identity, Relu, LeakyRelu, Sigmoid };

const char* activation_name(Activation a);
Activation activation_from_name(std::string_view name);

struct Layer {
  Matrix weight;  // out x in
  Vector bias;    // out
  Activation act = Activation::Identity;
  double slope = 0.0;  // LeakyRelu only
};

struct DenseNet {
  std::vector<Layer> layers;

  Index input_dim() const { return layers.front().weight.cols(); }
  Index output_dim() const { return layers.back().weight.rows(); }
  bool piecewise_linear() const;
};

// Pre- and post-activation values kept from a forward pass for backward.
struct ForwardTrace {
  Matrix input;
  std::vector<Matrix> pre;   // batch x layer width
  std::vector<Matrix> post;

  const Matrix& output() const { return post.back(); }
};

struct GradientBundle {
  std::vector<Matrix> weight;  // shaped like the net's weights
  std::vector<Vector> bias;
  Matrix input;                // batch x input dim

  GradientBundle& operator+=(const GradientBundle& other);
  GradientBundle& scale(double s);
  static GradientBundle zeros_like(const DenseNet& net, Index batch);
};

ForwardTrace forward(const DenseNet& net, const Matrix& batch);

// Chain rule from `upstream` = dObjective/dOutput (same shape as the
// output); returns parameter gradients plus the gradient at the input.
GradientBundle backward(const DenseNet& net, const ForwardTrace& trace,
                        const Matrix& upstream);

// Per-row gradient of a scalar-output net with respect to its input row.
Matrix input_gradient(const DenseNet& net, const Matrix& x);

struct PenaltyGradient {
  GradientBundle grads;  // d/dparams of mean_rows (||grad_x D||_2 - 1)^2
  double penalty = 0.0;  // mean over all rows, zero-norm rows contribute 1
  long skipped_rows = 0; // rows with exactly zero input-gradient norm
};

// Double backward through the input-gradient computation; valid for
// piecewise-linear activations only (their second derivative vanishes
// almost everywhere, so activation masks are treated as constants).
PenaltyGradient penalty_parameter_gradient(const DenseNet& critic,
                                           const Matrix& x_hat);

struct AdamConfig {
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  double weight_decay = 0.0;  // decoupled, applied after the Adam step
};

struct AdamState {
  AdamConfig cfg;
  std::vector<Matrix> m_w, v_w;
  std::vector<Vector> m_b, v_b;
  long t = 0;

  static AdamState init(const DenseNet& net, const AdamConfig& cfg);
};

void adam_step(DenseNet& net, const GradientBundle& grads, AdamState& state);

// Fan-in scaled uniform init (He-style gain for relu/leaky-relu), zero
// biases, bit-reproducible per seed.
DenseNet init_net(const std::vector<Index>& layer_sizes,
                  const std::vector<Activation>& activations,
                  std::uint64_t seed, double leaky_slope = 0.2);

// Versioned JSON checkpoint; round-trips parameters bit-exactly.
std::string save_net(const DenseNet& net);
DenseNet load_net(const std::string& text);

}  // namespace amptk
