#pragma once

#include "qsuper/matrix.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace qsuper {

/// A bilinear map U x V -> W stored by its values on basis pairs:
/// at(i, j) is the coordinate vector of f(u_i, v_j) in W.
class BilinearTable {
   public:
    BilinearTable() = default;
    BilinearTable(std::size_t left, std::size_t right, std::size_t target)
        : left_(left), right_(right), target_(target), data_(left * right * target) {}

    std::size_t left_dim() const noexcept { return left_; }
    std::size_t right_dim() const noexcept { return right_; }
    std::size_t target_dim() const noexcept { return target_; }

    std::span<const Scalar> at(std::size_t i, std::size_t j) const {
        check(i, j);
        return {data_.data() + (i * right_ + j) * target_, target_};
    }
    std::span<Scalar> at(std::size_t i, std::size_t j) {
        check(i, j);
        return {data_.data() + (i * right_ + j) * target_, target_};
    }

    Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return at(i, j)[k]; }
    const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const { return at(i, j)[k]; }

    void set(std::size_t i, std::size_t j, std::span<const Scalar> v) {
        if (v.size() != target_) throw std::invalid_argument("bilinear value has wrong length");
        std::copy(v.begin(), v.end(), at(i, j).begin());
    }

    /// f(u_i, v) for a coordinate vector v.
    Vec apply_left(std::size_t i, std::span<const Scalar> v) const {
        Vec out = zero_vec(target_);
        for (std::size_t j = 0; j < right_; ++j) axpy(v[j], at(i, j), out);
        return out;
    }

    /// f(u, v_j) for a coordinate vector u.
    Vec apply_right(std::span<const Scalar> u, std::size_t j) const {
        Vec out = zero_vec(target_);
        for (std::size_t i = 0; i < left_; ++i) axpy(u[i], at(i, j), out);
        return out;
    }

    Vec operator()(std::span<const Scalar> u, std::span<const Scalar> v) const {
        if (u.size() != left_ || v.size() != right_) throw std::invalid_argument("bilinear argument length mismatch");
        Vec out = zero_vec(target_);
        for (std::size_t i = 0; i < left_; ++i) {
            if (u[i].is_zero()) continue;
            for (std::size_t j = 0; j < right_; ++j)
                if (!v[j].is_zero()) axpy(u[i] * v[j], at(i, j), out);
        }
        return out;
    }

    bool is_zero() const { return qsuper::is_zero(std::span<const Scalar>(data_)); }

    friend bool operator==(const BilinearTable&, const BilinearTable&) = default;

   private:
    void check(std::size_t i, std::size_t j) const {
        if (i >= left_ || j >= right_) throw std::out_of_range("bilinear table index out of range");
    }

    std::size_t left_ = 0;
    std::size_t right_ = 0;
    std::size_t target_ = 0;
    std::vector<Scalar> data_;
};

}  // namespace qsuper
