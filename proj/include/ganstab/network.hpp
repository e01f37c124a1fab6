#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ganstab/matrix.hpp"
#include "ganstab/rng.hpp"

namespace ganstab::nn {

enum class Activation { LeakyRelu, Sigmoid, Tanh, Linear };

std::string activation_name(Activation a);
Activation activation_from_name(const std::string& name);

// A parameter tensor paired with its gradient buffer, for the optimizer.
struct ParamRef {
  double* value;
  const double* grad;
  std::size_t count;
};

struct DenseLayer {
  Matrix weights;             // [out x in]
  std::vector<double> bias;   // [out]
  Activation activation = Activation::Linear;
  double leak = 0.2;          // slope, leaky-relu only

  Matrix weight_grad;
  std::vector<double> bias_grad;

  std::size_t in_dim() const { return weights.cols(); }
  std::size_t out_dim() const { return weights.rows(); }
};

// Dense feed-forward stack. forward() caches per-layer state for a
// subsequent backward(); infer() is const and touches no caches, so it
// is safe to call concurrently on a shared trained model.
class Network {
 public:
  Network() = default;
  Network(std::size_t input_dim, const std::vector<std::size_t>& layer_dims,
          const std::vector<Activation>& activations, double leak, Rng& rng);

  std::size_t input_dim() const { return input_dim_; }
  std::size_t output_dim() const { return layers_.empty() ? input_dim_ : layers_.back().out_dim(); }
  std::vector<DenseLayer>& layers() { return layers_; }
  const std::vector<DenseLayer>& layers() const { return layers_; }

  // Returns post-activation outputs of every layer; the last entry is the
  // network output. Pre-activations are cached for backward().
  std::vector<Matrix> forward(const Matrix& batch);

  // Gradient of the loss w.r.t. the input batch of the last forward().
  // Parameter gradient buffers are overwritten, not accumulated.
  Matrix backward(const Matrix& upstream_grad);

  Matrix infer(const Matrix& batch) const;

  std::vector<ParamRef> params();
  std::size_t param_count() const;

 private:
  std::size_t input_dim_ = 0;
  std::vector<DenseLayer> layers_;

  // forward() caches
  bool have_cache_ = false;
  Matrix cached_input_;
  std::vector<Matrix> pre_acts_;
  std::vector<Matrix> post_acts_;
};

void apply_activation(Matrix& m, Activation a, double leak);

// Builds a network with uniform +-sqrt(6/(fan_in+fan_out)) weights and
// zero biases; reproducible for a given rng state.
Network make_mlp(std::size_t input_dim, const std::vector<std::size_t>& hidden,
                 std::size_t output_dim, Activation hidden_act, Activation output_act,
                 double leak, Rng& rng);

}  // namespace ganstab::nn
