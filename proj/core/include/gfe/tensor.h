#pragma once

#include <array>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "gfe/errors.h"

namespace gfe {

// Dense NCHW tensor, row-major with w fastest.
template <typename T>
struct Tensor {
  int n = 0, c = 0, h = 0, w = 0;
  std::vector<T> data;

  Tensor() = default;
  Tensor(int n_, int c_, int h_, int w_) { resize(n_, c_, h_, w_); }

  void resize(int n_, int c_, int h_, int w_) {
    n = n_;
    c = c_;
    h = h_;
    w = w_;
    data.assign(numel(), T(0));
  }

  std::size_t numel() const {
    return static_cast<std::size_t>(n) * c * h * w;
  }

  bool empty() const { return numel() == 0; }

  bool same_shape(const Tensor& o) const {
    return n == o.n && c == o.c && h == o.h && w == o.w;
  }

  T* ptr() { return data.data(); }
  const T* ptr() const { return data.data(); }

  std::size_t index(int in, int ic, int iy, int ix) const {
    return ((static_cast<std::size_t>(in) * c + ic) * h + iy) * w + ix;
  }

  T& at(int in, int ic, int iy, int ix) { return data[index(in, ic, iy, ix)]; }
  const T& at(int in, int ic, int iy, int ix) const {
    return data[index(in, ic, iy, ix)];
  }

  void fill(T v) { std::fill(data.begin(), data.end(), v); }

  void zero() { fill(T(0)); }

  std::array<int, 4> shape() const { return {n, c, h, w}; }

  std::string shape_str() const {
    std::ostringstream os;
    os << "(" << n << "," << c << "," << h << "," << w << ")";
    return os.str();
  }

  static Tensor zeros_like(const Tensor& o) { return Tensor(o.n, o.c, o.h, o.w); }

  template <typename U>
  Tensor<U> cast() const {
    Tensor<U> out(n, c, h, w);
    for (std::size_t i = 0; i < numel(); ++i) out.data[i] = static_cast<U>(data[i]);
    return out;
  }
};

using TensorF = Tensor<float>;
using TensorD = Tensor<double>;

template <typename T>
void check_same_shape(const Tensor<T>& a, const Tensor<T>& b, const char* what) {
  if (!a.same_shape(b)) {
    throw ShapeError(std::string(what) + ": shape mismatch " + a.shape_str() +
                     " vs " + b.shape_str());
  }
}

}  // namespace gfe
