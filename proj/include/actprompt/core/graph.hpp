#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "actprompt/core/tensor.hpp"

namespace actprompt {

// Handle into a Graph's node arena.
struct V {
  std::int32_t id = -1;
  bool valid() const { return id >= 0; }
};

// Define-by-run reverse-mode tape over 2-D Tensors. One Graph is built per
// forward pass; creation order is a topological order, so backward() is a
// single reverse sweep. Values are double precision throughout, which the
// finite-difference checks rely on.
class Graph {
 public:
  enum class Op : std::uint8_t {
    kLeaf, kAdd, kSub, kMul, kScale, kMatMul, kTranspose, kAddRowVec,
    kConcatRows, kConcatCols, kSliceRows, kSliceCols, kLayerNorm,
    kSoftmaxRows, kGelu, kL2NormRows, kMeanRows, kSumAll, kCosine,
    kLogSumExp,
  };

  V leaf(Tensor value, bool requires_grad = false);
  V constant(Tensor value) { return leaf(std::move(value), false); }
  V param(const Tensor& value) { return leaf(value, true); }

  const Tensor& val(V v) const;
  const Tensor& grad(V v) const;  // zero-shaped if never touched by backward
  bool requires_grad(V v) const;
  std::size_t node_count() const { return nodes_.size(); }

  // Elementwise; shapes must match.
  V add(V a, V b);
  V sub(V a, V b);
  V mul(V a, V b);
  V scale(V a, double c);
  // (RxK) x (KxC) -> (RxC)
  V matmul(V a, V b);
  V transpose(V a);
  // (RxC) + (1xC) broadcast over rows
  V add_rowvec(V a, V v);
  V concat_rows(std::span<const V> parts);
  V concat_cols(std::span<const V> parts);
  V slice_rows(V a, int start, int count);
  V slice_cols(V a, int start, int count);
  V row(V a, int r) { return slice_rows(a, r, 1); }
  // Row-wise layer norm with affine params gamma/beta (1xC).
  V layer_norm_rows(V x, V gamma, V beta, double eps = 1e-5);
  V softmax_rows(V x);
  V gelu(V x);
  // Rows normalized to unit L2 norm; exactly-zero rows pass through as zero.
  V l2normalize_rows(V x);
  V mean_rows(V x);   // (RxC) -> (1xC)
  V sum_all(V x);     // -> 1x1
  // Cosine similarity of two 1xD rows -> 1x1; zero-norm input yields 0.
  V cosine(V a, V b);
  V logsumexp(V x);   // (1xN) -> 1x1, max-shifted

  // Mean squared error over all elements -> 1x1 (composite).
  V mse(V a, V b);

  // Seeds d(root)=1 and propagates to every grad-requiring node. root must
  // be 1x1.
  void backward(V root);

 private:
  struct Node {
    Tensor value;
    Tensor grad;
    std::vector<std::int32_t> parents;
    Op op = Op::kLeaf;
    bool requires_grad = false;
    int i0 = 0, i1 = 0;
    double d0 = 0.0;
  };

  V push(Node node);
  Node& at(V v);
  const Node& at(V v) const;
  Tensor& grad_buf(int id);
  void backprop_node(int id);

  std::vector<Node> nodes_;
};

}  // namespace actprompt
