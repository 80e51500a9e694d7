#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace bondsynth::ad {

using Shape = std::vector<std::size_t>;

// Dense row-major tensor of 64-bit floats. Rank 1 or 2 is all the networks
// here need. Value semantics; a Tensor never aliases another.
class Tensor {
  public:
    Tensor() = default;
    explicit Tensor(Shape shape);  // zero-filled
    Tensor(Shape shape, std::vector<double> data);

    static Tensor scalar(double v);
    static Tensor zeros(const Shape& shape);
    static Tensor full(const Shape& shape, double v);
    static Tensor row(std::vector<double> data);            // shape {1, n}
    static Tensor vec(std::vector<double> data);            // shape {n}
    static Tensor matrix(std::size_t r, std::size_t c, std::vector<double> data);

    const Shape& shape() const { return shape_; }
    std::size_t rank() const { return shape_.size(); }
    std::size_t size() const { return data_.size(); }
    bool is_scalar() const { return data_.size() == 1; }

    // 2-D accessors; rank-1 tensors are treated as a single row.
    std::size_t rows() const;
    std::size_t cols() const;
    double& at(std::size_t r, std::size_t c);
    double at(std::size_t r, std::size_t c) const;

    double& operator[](std::size_t i) { return data_[i]; }
    double operator[](std::size_t i) const { return data_[i]; }
    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    std::vector<double>& vec_data() { return data_; }
    const std::vector<double>& vec_data() const { return data_; }

    bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }
    bool all_finite() const;
    double item() const;  // value of a 1-element tensor

    double l2_norm() const;
    std::string shape_str() const;

  private:
    Shape shape_;
    std::vector<double> data_;
};

std::size_t shape_size(const Shape& shape);

}  // namespace bondsynth::ad
