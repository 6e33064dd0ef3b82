// Copyright 2026 The srank Authors
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

#include "srank/tensor_core.hpp"

#include <stdexcept>

#include <Eigen/SVD>
#include <fmt/format.h>

namespace srank {

double max_abs(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  return a.cwiseAbs().maxCoeff();
}

double frobenius(const ComplexMatrix& a) { return a.norm(); }

ComplexMatrix dagger(const ComplexMatrix& a) { return a.adjoint(); }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

double unitarity_deviation(const ComplexMatrix& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument(
        fmt::format("unitarity check requires a square matrix, got {}x{}", a.rows(), a.cols()));
  ComplexMatrix g = a * a.adjoint();
  g -= ComplexMatrix::Identity(a.rows(), a.cols());
  return max_abs(g);
}

bool is_unitary(const ComplexMatrix& a, double tol) {
  return a.rows() == a.cols() && unitarity_deviation(a) <= tol;
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return max_abs(a - b) <= tol;
}

Svd svd(const ComplexMatrix& a) {
  Eigen::JacobiSVD<ComplexMatrix> dec(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (dec.info() != Eigen::Success)
    throw std::runtime_error("svd: backend did not converge");
  return Svd{dec.matrixU(), dec.singularValues(), dec.matrixV()};
}

int numerical_rank(const Eigen::VectorXd& singular_values, double rel_tol) {
  if (singular_values.size() == 0) return 0;
  double smax = singular_values.maxCoeff();
  if (smax <= 0.0) return 0;
  double threshold = rel_tol * smax;
  int rank = 0;
  for (Eigen::Index i = 0; i < singular_values.size(); ++i)
    if (singular_values(i) > threshold) ++rank;
  return rank;
}

int numerical_rank(const ComplexMatrix& a, double rel_tol) {
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<ComplexMatrix> dec(a);
  return numerical_rank(dec.singularValues(), rel_tol);
}

Tensor3::Tensor3(int d1, int d2, int d3) : dims_{d1, d2, d3} {
  if (d1 <= 0 || d2 <= 0 || d3 <= 0)
    throw std::invalid_argument(fmt::format("Tensor3 dims must be positive, got ({}, {}, {})", d1, d2, d3));
  data_.assign(static_cast<size_t>(d1) * d2 * d3, Complex{0.0, 0.0});
}

Complex& Tensor3::at(int i, int j, int k) {
  return data_[(static_cast<size_t>(i) * dims_[1] + j) * dims_[2] + k];
}

const Complex& Tensor3::at(int i, int j, int k) const {
  return data_[(static_cast<size_t>(i) * dims_[1] + j) * dims_[2] + k];
}

double Tensor3::frobenius() const {
  double sum = 0.0;
  for (const Complex& z : data_) sum += std::norm(z);
  return std::sqrt(sum);
}

double Tensor3::max_abs() const {
  double m = 0.0;
  for (const Complex& z : data_) m = std::max(m, std::abs(z));
  return m;
}

double max_abs_diff(const Tensor3& t1, const Tensor3& t2) {
  if (t1.dims() != t2.dims())
    throw std::invalid_argument("max_abs_diff: tensor shapes differ");
  double m = 0.0;
  for (int i = 0; i < t1.dims()[0]; ++i)
    for (int j = 0; j < t1.dims()[1]; ++j)
      for (int k = 0; k < t1.dims()[2]; ++k)
        m = std::max(m, std::abs(t1.at(i, j, k) - t2.at(i, j, k)));
  return m;
}

ComplexMatrix mode_flatten(const Tensor3& t, int mode) {
  const auto& d = t.dims();
  ComplexMatrix out;
  switch (mode) {
    case 1:
      out.setZero(d[0], d[1] * d[2]);
      for (int i = 0; i < d[0]; ++i)
        for (int j = 0; j < d[1]; ++j)
          for (int k = 0; k < d[2]; ++k) out(i, j * d[2] + k) = t.at(i, j, k);
      break;
    case 2:
      out.setZero(d[1], d[0] * d[2]);
      for (int i = 0; i < d[0]; ++i)
        for (int j = 0; j < d[1]; ++j)
          for (int k = 0; k < d[2]; ++k) out(j, i * d[2] + k) = t.at(i, j, k);
      break;
    case 3:
      out.setZero(d[2], d[0] * d[1]);
      for (int i = 0; i < d[0]; ++i)
        for (int j = 0; j < d[1]; ++j)
          for (int k = 0; k < d[2]; ++k) out(k, i * d[1] + j) = t.at(i, j, k);
      break;
    default:
      throw std::invalid_argument(fmt::format("mode_flatten: mode must be 1, 2 or 3, got {}", mode));
  }
  return out;
}

ComplexMatrix reconstruct_matrix(const Decomposition& d) {
  if (d.terms.empty())
    throw std::invalid_argument("reconstruct_matrix: empty decomposition");
  ComplexMatrix sum;
  for (const Term& term : d.terms) {
    if (term.factors.empty())
      throw std::invalid_argument("reconstruct_matrix: term without factors");
    ComplexMatrix prod = term.factors[0];
    for (size_t f = 1; f < term.factors.size(); ++f) prod = kron(prod, term.factors[f]);
    prod *= term.weight;
    if (sum.size() == 0) {
      sum = prod;
    } else {
      if (sum.rows() != prod.rows() || sum.cols() != prod.cols())
        throw std::invalid_argument("reconstruct_matrix: term shapes disagree");
      sum += prod;
    }
  }
  return sum;
}

namespace {

// Length-d coefficient vector of a factor: pass-through for vectors, row-major
// vectorization for square matrices (matrix units are exactly that basis).
ComplexVector coefficient_vector(const ComplexMatrix& factor, int d) {
  ComplexVector v(d);
  if ((factor.cols() == 1 && factor.rows() == d) || (factor.rows() == 1 && factor.cols() == d)) {
    for (int x = 0; x < d; ++x) v(x) = factor.cols() == 1 ? factor(x, 0) : factor(0, x);
    return v;
  }
  if (factor.rows() == factor.cols() && factor.size() == d) {
    int n = static_cast<int>(factor.rows());
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) v(r * n + c) = factor(r, c);
    return v;
  }
  throw std::invalid_argument(
      fmt::format("reconstruct_cp: factor of shape {}x{} does not yield {} coefficients",
                  factor.rows(), factor.cols(), d));
}

}  // namespace

Tensor3 reconstruct_cp(const Decomposition& d, const std::array<int, 3>& dims) {
  Tensor3 out(dims[0], dims[1], dims[2]);
  for (const Term& term : d.terms) {
    if (term.factors.size() != 3)
      throw std::invalid_argument(
          fmt::format("reconstruct_cp: expected 3 factors per term, got {}", term.factors.size()));
    ComplexVector a = coefficient_vector(term.factors[0], dims[0]);
    ComplexVector b = coefficient_vector(term.factors[1], dims[1]);
    ComplexVector c = coefficient_vector(term.factors[2], dims[2]);
    for (int i = 0; i < dims[0]; ++i) {
      if (a(i) == Complex{0.0, 0.0}) continue;
      for (int j = 0; j < dims[1]; ++j) {
        Complex ab = term.weight * a(i) * b(j);
        if (ab == Complex{0.0, 0.0}) continue;
        for (int k = 0; k < dims[2]; ++k) out.at(i, j, k) += ab * c(k);
      }
    }
  }
  return out;
}

}  // namespace srank
