#pragma once

#include "vseg/tensor.hpp"

namespace vseg::kernels {

// The compute-heavy inner loops live here in two flavours. `parallel` is the
// production backend: OpenMP over independent output slices, inner loops
// written so the compiler can vectorize them. `serial` is a plain textbook
// implementation kept as a reference for tests and the kernel benchmark.
// Both backends are deterministic; forward and backward-input match the
// reference bit for bit (identical per-element summation order), the weight
// gradient uses lane accumulators and matches to float rounding.

enum class Backend { Serial, Parallel };

Backend backend();
void set_backend(Backend b);

// 2-d convolution, stride 1, "same" padding (pad = k/2), square kernel k in {1,3}.
// x: (N,Cin,H,W)  w: (Cout,Cin,k,k)  b: (Cout)  y: (N,Cout,H,W)
void conv2d_forward(const Tensor& x, const Tensor& w, const Tensor& b, Tensor& y);

// dx: (N,Cin,H,W) overwritten
void conv2d_backward_input(const Tensor& dy, const Tensor& w, Tensor& dx);

// dw/db accumulated (+=)
void conv2d_backward_params(const Tensor& x, const Tensor& dy, Tensor& dw, Tensor& db);

namespace serial {
void conv2d_forward(const Tensor& x, const Tensor& w, const Tensor& b, Tensor& y);
void conv2d_backward_input(const Tensor& dy, const Tensor& w, Tensor& dx);
void conv2d_backward_params(const Tensor& x, const Tensor& dy, Tensor& dw, Tensor& db);
} // namespace serial

namespace parallel {
void conv2d_forward(const Tensor& x, const Tensor& w, const Tensor& b, Tensor& y);
void conv2d_backward_input(const Tensor& dy, const Tensor& w, Tensor& dx);
void conv2d_backward_params(const Tensor& x, const Tensor& dy, Tensor& dw, Tensor& db);
} // namespace parallel

} // namespace vseg::kernels
