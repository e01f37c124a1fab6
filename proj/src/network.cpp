#include "ganstab/network.hpp"

#include <cmath>

namespace ganstab::nn {

std::string activation_name(Activation a) {
  switch (a) {
    case Activation::LeakyRelu: return "leaky_relu";
    case Activation::Sigmoid: return "sigmoid";
    case Activation::Tanh: return "tanh";
    case Activation::Linear: return "linear";
  }
  throw ArgumentError("unknown activation tag");
}

Activation activation_from_name(const std::string& name) {
  if (name == "leaky_relu") return Activation::LeakyRelu;
  if (name == "sigmoid") return Activation::Sigmoid;
  if (name == "tanh") return Activation::Tanh;
  if (name == "linear") return Activation::Linear;
  throw ArgumentError("unknown activation name: " + name);
}

void apply_activation(Matrix& m, Activation a, double leak) {
  double* p = m.data();
  const std::size_t n = m.size();
  switch (a) {
    case Activation::LeakyRelu:
      for (std::size_t i = 0; i < n; ++i)
        if (p[i] < 0.0) p[i] *= leak;
      break;
    case Activation::Sigmoid:
      for (std::size_t i = 0; i < n; ++i) p[i] = 1.0 / (1.0 + std::exp(-p[i]));
      break;
    case Activation::Tanh:
      for (std::size_t i = 0; i < n; ++i) p[i] = std::tanh(p[i]);
      break;
    case Activation::Linear:
      break;
  }
}

namespace {

// derivative w.r.t. pre-activation, from cached pre- and post-activations
void activation_grad_in_place(Matrix& delta, const Matrix& pre, const Matrix& post,
                              Activation a, double leak) {
  double* d = delta.data();
  const double* z = pre.data();
  const double* y = post.data();
  const std::size_t n = delta.size();
  switch (a) {
    case Activation::LeakyRelu:
      for (std::size_t i = 0; i < n; ++i)
        if (z[i] < 0.0) d[i] *= leak;
      break;
    case Activation::Sigmoid:
      for (std::size_t i = 0; i < n; ++i) d[i] *= y[i] * (1.0 - y[i]);
      break;
    case Activation::Tanh:
      for (std::size_t i = 0; i < n; ++i) d[i] *= 1.0 - y[i] * y[i];
      break;
    case Activation::Linear:
      break;
  }
}

DenseLayer make_layer(std::size_t in, std::size_t out, Activation act, double leak, Rng& rng) {
  DenseLayer l;
  l.weights = Matrix(out, in);
  l.bias.assign(out, 0.0);
  l.activation = act;
  l.leak = leak;
  const double limit = std::sqrt(6.0 / static_cast<double>(in + out));
  for (double& w : l.weights.values()) w = rng.uniform(-limit, limit);
  l.weight_grad = Matrix(out, in);
  l.bias_grad.assign(out, 0.0);
  return l;
}

}  // namespace

Network::Network(std::size_t input_dim, const std::vector<std::size_t>& layer_dims,
                 const std::vector<Activation>& activations, double leak, Rng& rng)
    : input_dim_(input_dim) {
  if (layer_dims.size() != activations.size())
    throw ArgumentError("Network: one activation per layer required");
  std::size_t in = input_dim;
  for (std::size_t i = 0; i < layer_dims.size(); ++i) {
    layers_.push_back(make_layer(in, layer_dims[i], activations[i], leak, rng));
    in = layer_dims[i];
  }
}

std::vector<Matrix> Network::forward(const Matrix& batch) {
  if (batch.cols() != input_dim_)
    throw ShapeError("forward: batch has " + std::to_string(batch.cols()) +
                     " columns, network expects " + std::to_string(input_dim_));
  cached_input_ = batch;
  pre_acts_.clear();
  post_acts_.clear();
  const Matrix* x = &cached_input_;
  for (auto& layer : layers_) {
    Matrix z = mul_nt(*x, layer.weights);
    add_row_vector(z, layer.bias);
    pre_acts_.push_back(z);
    apply_activation(z, layer.activation, layer.leak);
    post_acts_.push_back(std::move(z));
    x = &post_acts_.back();
  }
  have_cache_ = true;
  return post_acts_;
}

Matrix Network::backward(const Matrix& upstream_grad) {
  if (!have_cache_) throw StateError("backward called before forward");
  if (upstream_grad.rows() != cached_input_.rows() ||
      upstream_grad.cols() != output_dim())
    throw ShapeError("backward: upstream gradient shape mismatch");

  Matrix delta = upstream_grad;
  for (std::size_t li = layers_.size(); li-- > 0;) {
    DenseLayer& layer = layers_[li];
    activation_grad_in_place(delta, pre_acts_[li], post_acts_[li], layer.activation,
                             layer.leak);
    const Matrix& input = (li == 0) ? cached_input_ : post_acts_[li - 1];
    layer.weight_grad = mul_tn(delta, input);
    for (std::size_t j = 0; j < layer.bias.size(); ++j) {
      double acc = 0.0;
      for (std::size_t i = 0; i < delta.rows(); ++i) acc += delta(i, j);
      layer.bias_grad[j] = acc;
    }
    delta = mul_nn(delta, layer.weights);
  }
  return delta;
}

Matrix Network::infer(const Matrix& batch) const {
  if (batch.cols() != input_dim_)
    throw ShapeError("infer: batch has " + std::to_string(batch.cols()) +
                     " columns, network expects " + std::to_string(input_dim_));
  Matrix x = batch;
  for (const auto& layer : layers_) {
    Matrix z = mul_nt(x, layer.weights);
    add_row_vector(z, layer.bias);
    apply_activation(z, layer.activation, layer.leak);
    x = std::move(z);
  }
  return x;
}

std::vector<ParamRef> Network::params() {
  std::vector<ParamRef> out;
  for (auto& l : layers_) {
    out.push_back({l.weights.data(), l.weight_grad.data(), l.weights.size()});
    out.push_back({l.bias.data(), l.bias_grad.data(), l.bias.size()});
  }
  return out;
}

std::size_t Network::param_count() const {
  std::size_t n = 0;
  for (const auto& l : layers_) n += l.weights.size() + l.bias.size();
  return n;
}

Network make_mlp(std::size_t input_dim, const std::vector<std::size_t>& hidden,
                 std::size_t output_dim, Activation hidden_act, Activation output_act,
                 double leak, Rng& rng) {
  std::vector<std::size_t> dims = hidden;
  dims.push_back(output_dim);
  std::vector<Activation> acts(hidden.size(), hidden_act);
  acts.push_back(output_act);
  return Network(input_dim, dims, acts, leak, rng);
}

}  // namespace ganstab::nn
