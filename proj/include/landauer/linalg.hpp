// Copyright 2026 The Landauer Collision Model Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Dense complex matrices for small quantum registers.
//
// Everything here is sized for dimensions up to kMaxDim (a handful of
// qubits). Algorithms are the straightforward O(dim^3) ones; the Hermitian
// eigensolver is a cyclic complex Jacobi iteration.

#include <complex>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace landauer {

using Complex = std::complex<double>;

inline constexpr std::size_t kMaxDim = 64;

/// Square complex matrix stored row-major.
class ComplexMatrix {
 public:
  /// Zero matrix of the given dimension. Throws CapacityError above kMaxDim
  /// and ContractError for dim == 0.
  explicit ComplexMatrix(std::size_t dim);

  /// Row-major entries; entries.size() must equal dim * dim.
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

  /// Row-wise literal, e.g. {{1, 0}, {0, -1}}.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> values);
  static ComplexMatrix diagonal(std::initializer_list<double> values);

  std::size_t dim() const { return dim_; }

  Complex& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return data_[row * dim_ + col];
  }

  std::span<const Complex> entries() const { return data_; }
  std::span<Complex> entries() { return data_; }

  bool all_finite() const;

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_;
  std::vector<Complex> data_;
};

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix subtract(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix scale(const ComplexMatrix& a, Complex factor);
ComplexMatrix mul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix dagger(const ComplexMatrix& a);
Complex trace(const ComplexMatrix& a);

/// Tr(a * b) without forming the product.
Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b);

double frobenius_norm(const ComplexMatrix& a);

/// ||a - a^dagger||_F
double hermiticity_defect(const ComplexMatrix& a);

/// Kronecker product; `a` indexes the most significant block.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

inline ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) { return add(a, b); }
inline ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  return subtract(a, b);
}
inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return mul(a, b); }
inline ComplexMatrix operator*(Complex factor, const ComplexMatrix& a) { return scale(a, factor); }

/// Spectral decomposition A = V diag(eigenvalues) V^dagger.
struct EigenDecomposition {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // column k pairs with eigenvalues[k]
};

struct JacobiOptions {
  double rotation_threshold = 1e-14;  // relative to ||A||_F
  int max_sweeps = 100;
};

/// Cyclic Jacobi diagonalization of a Hermitian matrix.
///
/// Throws ContractError when ||a - a^dagger||_F > 1e-10 * dim and
/// NumericError when the off-diagonal mass does not fall below the threshold
/// within `max_sweeps` sweeps.
EigenDecomposition hermitian_eig(const ComplexMatrix& a, const JacobiOptions& options = {});

/// Eigenvalues only (ascending).
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a);

inline constexpr double kDefaultZeroClip = 1e-12;

/// What a spectral function does with eigenvalues inside the zero-clip band.
enum class ClippedEigenvalues {
  kEvaluateAtZero,  // pass exactly 0 to f
  kExclude,         // drop them (projector onto the support)
};

/// V diag(f(lambda_i)) V^dagger for Hermitian `a`.
///
/// Eigenvalues with |lambda| < zero_clip are handled per `clipped`. Throws
/// DomainError when f returns a non-finite value at a retained eigenvalue.
ComplexMatrix matrix_function(const ComplexMatrix& a, const std::function<double(double)>& f,
                              double zero_clip = kDefaultZeroClip,
                              ClippedEigenvalues clipped = ClippedEigenvalues::kEvaluateAtZero);

/// Same, reusing an existing decomposition of `a`.
ComplexMatrix matrix_function(const EigenDecomposition& eig, const std::function<double(double)>& f,
                              double zero_clip = kDefaultZeroClip,
                              ClippedEigenvalues clipped = ClippedEigenvalues::kEvaluateAtZero);

}  // namespace landauer
