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

#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qreuse {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major.
///
/// Gate matrices act on the gate's qubit list with qubits[0] as the most
/// significant bit of the row/column index, so `cx` on (control, target) is
/// the textbook [[1,0,0,0],[0,1,0,0],[0,0,0,1],[0,0,1,0]].
class Matrix {
   public:
    Matrix() = default;
    explicit Matrix(size_t dim) : dim_(dim), data_(dim * dim) {}
    Matrix(size_t dim, std::vector<Complex> data);

    static Matrix identity(size_t dim);

    size_t dim() const { return dim_; }
    const std::vector<Complex> &data() const { return data_; }

    Complex &operator()(size_t r, size_t c) { return data_[r * dim_ + c]; }
    const Complex &operator()(size_t r, size_t c) const { return data_[r * dim_ + c]; }

    Matrix adjoint() const;
    Matrix operator*(const Matrix &other) const;

    bool is_unitary(double tol = 1e-10) const;
    double max_abs_diff(const Matrix &other) const;

    bool operator==(const Matrix &other) const = default;

   private:
    size_t dim_ = 0;
    std::vector<Complex> data_;
};

/// Matrix for a named standard gate (h, x, y, z, s, sdg, t, tdg, rx, ry, rz,
/// cx, cz, swap, rzz, and any of those with a trailing "†" adjoint marker).
/// Returns nullopt for unknown labels or wrong parameter/arity counts.
std::optional<Matrix> standard_gate_matrix(const std::string &label, std::span<const double> params,
                                           size_t arity);

/// Haar-distributed unitary of the given dimension, deterministic in `seed`.
Matrix haar_unitary(size_t dim, uint64_t seed);

/// Unitary DFT matrix of the given dimension.
Matrix dft_matrix(size_t dim);

/// Label with the adjoint marker toggled: "g" <-> "g†".
std::string adjoint_label(const std::string &label);

}  // namespace qreuse
