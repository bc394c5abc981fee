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

#include "landauer/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "landauer/errors.hpp"

namespace landauer {

namespace {

void check_dim(std::size_t dim) {
  if (dim == 0) throw ContractError("matrix dimension must be at least 1");
  if (dim > kMaxDim) {
    throw CapacityError("matrix dimension " + std::to_string(dim) + " exceeds cap " +
                        std::to_string(kMaxDim));
  }
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw ContractError(std::string(op) + ": dimension mismatch (" + std::to_string(a.dim()) +
                        " vs " + std::to_string(b.dim()) + ")");
  }
}

ComplexMatrix checked(ComplexMatrix m, const char* op) {
  if (!m.all_finite()) throw NumericError(std::string(op) + ": produced non-finite entries");
  return m;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim) {
  check_dim(dim);
  data_.assign(dim * dim, Complex{0.0, 0.0});
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), data_(std::move(entries)) {
  check_dim(dim);
  if (data_.size() != dim * dim) {
    throw ContractError("expected " + std::to_string(dim * dim) + " entries, got " +
                        std::to_string(data_.size()));
  }
  if (!all_finite()) throw NumericError("matrix entries must be finite");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()) {
  check_dim(dim_);
  data_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) throw ContractError("matrix literal must be square");
    data_.insert(data_.end(), row.begin(), row.end());
  }
  if (!all_finite()) throw NumericError("matrix entries must be finite");
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return checked(std::move(m), "diagonal");
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<double> values) {
  return diagonal(std::span<const double>(values.begin(), values.size()));
}

bool ComplexMatrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "add");
  ComplexMatrix out = a;
  auto dst = out.entries();
  auto src = b.entries();
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += src[i];
  return checked(std::move(out), "add");
}

ComplexMatrix subtract(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "subtract");
  ComplexMatrix out = a;
  auto dst = out.entries();
  auto src = b.entries();
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] -= src[i];
  return checked(std::move(out), "subtract");
}

ComplexMatrix scale(const ComplexMatrix& a, Complex factor) {
  ComplexMatrix out = a;
  for (auto& z : out.entries()) z *= factor;
  return checked(std::move(out), "scale");
}

ComplexMatrix mul(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "mul");
  const std::size_t n = a.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return checked(std::move(out), "mul");
}

ComplexMatrix dagger(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(j, i) = std::conj(a(i, j));
  return out;
}

Complex trace(const ComplexMatrix& a) {
  Complex sum{};
  for (std::size_t i = 0; i < a.dim(); ++i) sum += a(i, i);
  return sum;
}

Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "trace_of_product");
  Complex sum{};
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) sum += a(i, k) * b(k, i);
  return sum;
}

double frobenius_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (const auto& z : a.entries()) sum += std::norm(z);
  return std::sqrt(sum);
}

double hermiticity_defect(const ComplexMatrix& a) {
  double sum = 0.0;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sum += std::norm(a(i, j) - std::conj(a(j, i)));
  return std::sqrt(sum);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  if (na * nb > kMaxDim) {
    throw CapacityError("kron: product dimension " + std::to_string(na * nb) + " exceeds cap " +
                        std::to_string(kMaxDim));
  }
  ComplexMatrix out(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      const Complex aij = a(i, j);
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = aij * b(k, l);
    }
  return checked(std::move(out), "kron");
}

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) sum += std::norm(a(i, j));
  return std::sqrt(sum);
}

// One complex Jacobi rotation zeroing a(p, q). With a(p, q) = |b| e^{i phi}
// the rotation is G = diag(1, e^{-i phi}) * [[c, s], [-s, c]], which turns the
// (p, q) block real-symmetric before the classical real rotation.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double magnitude = std::abs(apq);
  // polar() keeps |phase| = 1 even for subnormal apq, so G stays unitary.
  const Complex phase = std::polar(1.0, std::arg(apq));  // e^{i phi}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  const double theta = (aqq - app) / (2.0 * magnitude);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const Complex g_pp = c;
  const Complex g_pq = s;
  const Complex g_qp = -s * std::conj(phase);
  const Complex g_qq = c * std::conj(phase);

  const std::size_t n = a.dim();
  // A <- A G
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * g_pp + akq * g_qp;
    a(k, q) = akp * g_pq + akq * g_qq;
  }
  // A <- G^dagger A
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(g_pp) * apk + std::conj(g_qp) * aqk;
    a(q, k) = std::conj(g_pq) * apk + std::conj(g_qq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
  // V <- V G
  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * g_pp + vkq * g_qp;
    v(k, q) = vkp * g_pq + vkq * g_qq;
  }
}

}  // namespace

EigenDecomposition hermitian_eig(const ComplexMatrix& a, const JacobiOptions& options) {
  const std::size_t n = a.dim();
  if (!a.all_finite()) throw NumericError("hermitian_eig: non-finite input");
  if (hermiticity_defect(a) > 1e-10 * static_cast<double>(n)) {
    throw ContractError("hermitian_eig: input is not Hermitian");
  }

  // Work on the exactly Hermitian part.
  ComplexMatrix work(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) work(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
  ComplexMatrix vectors = ComplexMatrix::identity(n);

  const double scale_norm = frobenius_norm(work);
  const double target = options.rotation_threshold * scale_norm;
  // Entries this small are dropped rather than rotated; the eigenvalue shift
  // is bounded by their size (Weyl).
  const double negligible = 1e-3 * target;

  int sweep = 0;
  while (off_diagonal_norm(work) > target) {
    if (sweep == options.max_sweeps) {
      throw NumericError("hermitian_eig: no convergence after " + std::to_string(sweep) +
                         " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q)
        if (std::abs(work(p, q)) > negligible) {
          rotate(work, vectors, p, q);
        } else {
          work(p, q) = 0.0;
          work(q, p) = 0.0;
        }
    ++sweep;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return work(i, i).real() < work(j, j).real();
  });

  EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = work(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.eigenvectors(r, k) = vectors(r, order[k]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a) {
  return hermitian_eig(a).eigenvalues;
}

ComplexMatrix matrix_function(const EigenDecomposition& eig, const std::function<double(double)>& f,
                              double zero_clip, ClippedEigenvalues clipped) {
  const std::size_t n = eig.eigenvectors.dim();
  std::vector<double> values(n, 0.0);
  std::vector<bool> keep(n, true);
  for (std::size_t k = 0; k < n; ++k) {
    double lambda = eig.eigenvalues[k];
    if (std::abs(lambda) < zero_clip) {
      if (clipped == ClippedEigenvalues::kExclude) {
        keep[k] = false;
        continue;
      }
      lambda = 0.0;
    }
    const double fx = f(lambda);
    if (!std::isfinite(fx)) {
      throw DomainError("matrix_function: f undefined at eigenvalue " + std::to_string(lambda));
    }
    values[k] = fx;
  }

  const auto& v = eig.eigenvectors;
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Complex sum{};
      for (std::size_t k = 0; k < n; ++k)
        if (keep[k]) sum += v(i, k) * values[k] * std::conj(v(j, k));
      out(i, j) = sum;
    }
  return out;
}

ComplexMatrix matrix_function(const ComplexMatrix& a, const std::function<double(double)>& f,
                              double zero_clip, ClippedEigenvalues clipped) {
  return matrix_function(hermitian_eig(a), f, zero_clip, clipped);
}

}  // namespace landauer
