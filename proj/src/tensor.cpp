#include "bondsynth/tensor.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "bondsynth/common.hpp"

namespace bondsynth::ad {

std::size_t shape_size(const Shape& shape) {
    std::size_t n = 1;
    for (auto d : shape) n *= d;
    return n;
}

Tensor::Tensor(Shape shape) : shape_(std::move(shape)), data_(shape_size(shape_), 0.0) {
    if (shape_.empty() || shape_.size() > 2) throw DimensionError("tensor rank must be 1 or 2");
}

Tensor::Tensor(Shape shape, std::vector<double> data) : shape_(std::move(shape)), data_(std::move(data)) {
    if (shape_.empty() || shape_.size() > 2) throw DimensionError("tensor rank must be 1 or 2");
    if (shape_size(shape_) != data_.size())
        throw DimensionError("tensor data length does not match shape " + shape_str());
}

Tensor Tensor::scalar(double v) { return Tensor({1}, {v}); }

Tensor Tensor::zeros(const Shape& shape) { return Tensor(shape); }

Tensor Tensor::full(const Shape& shape, double v) {
    Tensor t(shape);
    for (auto& x : t.data_) x = v;
    return t;
}

Tensor Tensor::row(std::vector<double> data) {
    std::size_t n = data.size();
    return Tensor({1, n}, std::move(data));
}

Tensor Tensor::vec(std::vector<double> data) {
    std::size_t n = data.size();
    return Tensor({n}, std::move(data));
}

Tensor Tensor::matrix(std::size_t r, std::size_t c, std::vector<double> data) {
    return Tensor({r, c}, std::move(data));
}

std::size_t Tensor::rows() const { return shape_.size() == 2 ? shape_[0] : 1; }

std::size_t Tensor::cols() const { return shape_.size() == 2 ? shape_[1] : shape_[0]; }

double& Tensor::at(std::size_t r, std::size_t c) { return data_[r * cols() + c]; }

double Tensor::at(std::size_t r, std::size_t c) const { return data_[r * cols() + c]; }

bool Tensor::all_finite() const {
    for (double v : data_)
        if (!std::isfinite(v)) return false;
    return true;
}

double Tensor::item() const {
    if (data_.size() != 1) throw ContractError("item() on tensor of size " + std::to_string(data_.size()));
    return data_[0];
}

double Tensor::l2_norm() const {
    double s = 0.0;
    for (double v : data_) s += v * v;
    return std::sqrt(s);
}

std::string Tensor::shape_str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < shape_.size(); ++i) os << (i ? "," : "") << shape_[i];
    os << ")";
    return os.str();
}

}  // namespace bondsynth::ad
