#pragma once

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace vseg {

// Dense row-major float tensor. Layouts used throughout the project:
// images/feature maps are (C,H,W) or batched (N,C,H,W), vectors are (N,D).
class Tensor {
public:
    Tensor() = default;

    explicit Tensor(std::vector<int> dims, float fill = 0.0f)
        : dims_(std::move(dims)) {
        for (int d : dims_) {
            if (d <= 0) throw std::invalid_argument("Tensor: non-positive dim");
        }
        data_.assign(count(), fill);
    }

    static Tensor zeros_like(const Tensor& t) { return Tensor(t.dims_); }

    const std::vector<int>& dims() const { return dims_; }
    int dim(int i) const { return dims_.at(static_cast<size_t>(i)); }
    int ndim() const { return static_cast<int>(dims_.size()); }

    size_t count() const {
        size_t n = 1;
        for (int d : dims_) n *= static_cast<size_t>(d);
        return n;
    }
    size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    float* data() { return data_.data(); }
    const float* data() const { return data_.data(); }

    float& operator[](size_t i) { return data_[i]; }
    float operator[](size_t i) const { return data_[i]; }

    // (n,c,y,x) accessor for 4-d tensors
    float& at(int n, int c, int y, int x) {
        return data_[idx4(n, c, y, x)];
    }
    float at(int n, int c, int y, int x) const {
        return data_[idx4(n, c, y, x)];
    }
    size_t idx4(int n, int c, int y, int x) const {
        return ((static_cast<size_t>(n) * dims_[1] + c) * dims_[2] + y) * dims_[3] + x;
    }

    // (c,y,x) accessor for 3-d tensors
    float& at3(int c, int y, int x) {
        return data_[(static_cast<size_t>(c) * dims_[1] + y) * dims_[2] + x];
    }
    float at3(int c, int y, int x) const {
        return data_[(static_cast<size_t>(c) * dims_[1] + y) * dims_[2] + x];
    }

    // pointer to the start of plane (n,c) of a 4-d tensor
    float* plane(int n, int c) {
        return data_.data() + idx4(n, c, 0, 0);
    }
    const float* plane(int n, int c) const {
        return data_.data() + idx4(n, c, 0, 0);
    }

    void fill(float v) { std::fill(data_.begin(), data_.end(), v); }

    bool same_shape(const Tensor& o) const { return dims_ == o.dims_; }

    std::string shape_str() const {
        std::string s = "(";
        for (size_t i = 0; i < dims_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(dims_[i]);
        }
        return s + ")";
    }

private:
    std::vector<int> dims_;
    std::vector<float> data_;
};

inline void check_shape(const Tensor& t, const std::vector<int>& dims, const char* what) {
    if (t.dims() != dims) {
        throw std::invalid_argument(std::string(what) + ": unexpected shape " + t.shape_str());
    }
}

} // namespace vseg
