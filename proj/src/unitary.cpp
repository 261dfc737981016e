// Copyright 2026 The qreuse Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qreuse/unitary.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qreuse/random.hpp"

namespace qreuse {

namespace {

constexpr std::string_view kDagger = "†";

bool ends_with_dagger(const std::string &label) {
    return label.size() >= kDagger.size() &&
           label.compare(label.size() - kDagger.size(), kDagger.size(), kDagger) == 0;
}

Matrix diag(std::initializer_list<Complex> entries) {
    Matrix m(entries.size());
    size_t i = 0;
    for (const auto &e : entries) {
        m(i, i) = e;
        i++;
    }
    return m;
}

std::optional<Matrix> base_gate(const std::string &name, std::span<const double> params, size_t arity) {
    using namespace std::complex_literals;
    const double r = 1.0 / std::sqrt(2.0);
    auto fixed = [&](size_t want_arity, std::vector<Complex> data) -> std::optional<Matrix> {
        if (arity != want_arity || !params.empty()) {
            return std::nullopt;
        }
        return Matrix(size_t{1} << want_arity, std::move(data));
    };
    auto angle = [&](size_t want_arity) -> std::optional<double> {
        if (arity != want_arity || params.size() != 1) {
            return std::nullopt;
        }
        return params[0];
    };

    if (name == "h") return fixed(1, {r, r, r, -r});
    if (name == "x") return fixed(1, {0, 1, 1, 0});
    if (name == "y") return fixed(1, {0, -1i, 1i, 0});
    if (name == "z") return fixed(1, {1, 0, 0, -1});
    if (name == "s") return fixed(1, {1, 0, 0, 1i});
    if (name == "sdg") return fixed(1, {1, 0, 0, -1i});
    if (name == "t") return fixed(1, {1, 0, 0, std::exp(1i * (std::numbers::pi / 4))});
    if (name == "tdg") return fixed(1, {1, 0, 0, std::exp(-1i * (std::numbers::pi / 4))});
    if (name == "cx") return fixed(2, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0});
    if (name == "cz") return fixed(2, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1});
    if (name == "swap") return fixed(2, {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1});
    if (name == "rx") {
        auto t = angle(1);
        if (!t) return std::nullopt;
        double c = std::cos(*t / 2), s = std::sin(*t / 2);
        return Matrix(2, {c, -1i * s, -1i * s, c});
    }
    if (name == "ry") {
        auto t = angle(1);
        if (!t) return std::nullopt;
        double c = std::cos(*t / 2), s = std::sin(*t / 2);
        return Matrix(2, {c, -s, s, c});
    }
    if (name == "rz") {
        auto t = angle(1);
        if (!t) return std::nullopt;
        return diag({std::exp(-1i * (*t / 2)), std::exp(1i * (*t / 2))});
    }
    if (name == "rzz") {
        auto t = angle(2);
        if (!t) return std::nullopt;
        Complex a = std::exp(-1i * (*t / 2)), b = std::exp(1i * (*t / 2));
        return diag({a, b, b, a});
    }
    return std::nullopt;
}

}  // namespace

Matrix::Matrix(size_t dim, std::vector<Complex> data) : dim_(dim), data_(std::move(data)) {
    if (data_.size() != dim_ * dim_) {
        throw std::invalid_argument("matrix data size does not match dimension");
    }
}

Matrix Matrix::identity(size_t dim) {
    Matrix m(dim);
    for (size_t i = 0; i < dim; i++) {
        m(i, i) = 1;
    }
    return m;
}

Matrix Matrix::adjoint() const {
    Matrix out(dim_);
    for (size_t r = 0; r < dim_; r++) {
        for (size_t c = 0; c < dim_; c++) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

Matrix Matrix::operator*(const Matrix &other) const {
    if (other.dim_ != dim_) {
        throw std::invalid_argument("matrix dimension mismatch");
    }
    Matrix out(dim_);
    for (size_t r = 0; r < dim_; r++) {
        for (size_t k = 0; k < dim_; k++) {
            Complex a = (*this)(r, k);
            if (a == Complex{}) {
                continue;
            }
            for (size_t c = 0; c < dim_; c++) {
                out(r, c) += a * other(k, c);
            }
        }
    }
    return out;
}

bool Matrix::is_unitary(double tol) const {
    if (dim_ == 0) {
        return false;
    }
    return (adjoint() * *this).max_abs_diff(identity(dim_)) <= tol;
}

double Matrix::max_abs_diff(const Matrix &other) const {
    if (other.dim_ != dim_) {
        return INFINITY;
    }
    double d = 0;
    for (size_t i = 0; i < data_.size(); i++) {
        d = std::max(d, std::abs(data_[i] - other.data_[i]));
    }
    return d;
}

std::string adjoint_label(const std::string &label) {
    if (ends_with_dagger(label)) {
        return label.substr(0, label.size() - kDagger.size());
    }
    return label + std::string(kDagger);
}

std::optional<Matrix> standard_gate_matrix(const std::string &label, std::span<const double> params,
                                           size_t arity) {
    if (ends_with_dagger(label)) {
        auto m = base_gate(adjoint_label(label), params, arity);
        if (!m) {
            return std::nullopt;
        }
        return m->adjoint();
    }
    return base_gate(label, params, arity);
}

Matrix haar_unitary(size_t dim, uint64_t seed) {
    // Gram-Schmidt on a complex Ginibre matrix (QR with positive diagonal R)
    // yields the Haar measure.
    SplitMix64 rng(seed);
    std::vector<std::vector<Complex>> cols(dim, std::vector<Complex>(dim));
    for (auto &col : cols) {
        for (auto &z : col) {
            auto [re, im] = rng.normal_pair();
            z = Complex(re, im) / std::sqrt(2.0);
        }
    }
    for (size_t j = 0; j < dim; j++) {
        for (size_t i = 0; i < j; i++) {
            Complex proj = 0;
            for (size_t k = 0; k < dim; k++) {
                proj += std::conj(cols[i][k]) * cols[j][k];
            }
            for (size_t k = 0; k < dim; k++) {
                cols[j][k] -= proj * cols[i][k];
            }
        }
        double norm = 0;
        for (const auto &z : cols[j]) {
            norm += std::norm(z);
        }
        norm = std::sqrt(norm);
        for (auto &z : cols[j]) {
            z /= norm;
        }
    }
    Matrix m(dim);
    for (size_t r = 0; r < dim; r++) {
        for (size_t c = 0; c < dim; c++) {
            m(r, c) = cols[c][r];
        }
    }
    return m;
}

Matrix dft_matrix(size_t dim) {
    using namespace std::complex_literals;
    Matrix m(dim);
    double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    for (size_t r = 0; r < dim; r++) {
        for (size_t c = 0; c < dim; c++) {
            double phase = 2 * std::numbers::pi * static_cast<double>(r * c % dim) / static_cast<double>(dim);
            m(r, c) = scale * std::exp(1i * phase);
        }
    }
    return m;
}

}  // namespace qreuse
