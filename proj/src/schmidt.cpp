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

#include "srank/schmidt.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

#include <fmt/format.h>

namespace srank {

namespace {

// Per-system digits of a flat index, most significant system first.
std::vector<int> digits(Eigen::Index index, const std::vector<int>& dims) {
  std::vector<int> out(dims.size());
  for (size_t s = dims.size(); s-- > 0;) {
    out[s] = static_cast<int>(index % dims[s]);
    index /= dims[s];
  }
  return out;
}

Eigen::Index side_dim(const std::vector<int>& systems, const std::vector<int>& dims) {
  Eigen::Index d = 1;
  for (int s : systems) d *= dims[s];
  return d;
}

// Flat pair index over one side of a cut: radix d_s^2 per system, the (row,
// column) pair of each system packed as i_s·d_s + j_s.
Eigen::Index pair_index(const std::vector<int>& systems, const std::vector<int>& dims,
                        const std::vector<int>& i, const std::vector<int>& j) {
  Eigen::Index idx = 0;
  for (int s : systems) idx = idx * (dims[s] * dims[s]) + (i[s] * dims[s] + j[s]);
  return idx;
}

Eigen::Index row_index(const std::vector<int>& systems, const std::vector<int>& dims,
                       const std::vector<int>& i) {
  Eigen::Index idx = 0;
  for (int s : systems) idx = idx * dims[s] + i[s];
  return idx;
}

void check_operator_dims(const ComplexMatrix& u, const std::vector<int>& dims) {
  Eigen::Index total = 1;
  for (int d : dims) {
    if (d < 1) throw std::invalid_argument("system dimensions must be positive");
    total *= d;
  }
  if (u.rows() != total || u.cols() != total)
    throw std::invalid_argument(fmt::format(
        "operator of shape {}x{} does not match total system dimension {}", u.rows(), u.cols(),
        total));
}

}  // namespace

void validate_cut(const Cut& cut, int n_systems) {
  if (cut.left.empty() || cut.right.empty())
    throw std::invalid_argument("cut must have systems on both sides");
  std::set<int> seen;
  for (int s : cut.left) {
    if (s < 0 || s >= n_systems)
      throw std::invalid_argument(fmt::format("cut names system {} of {}", s, n_systems));
    if (!seen.insert(s).second)
      throw std::invalid_argument(fmt::format("cut repeats system {}", s));
  }
  for (int s : cut.right) {
    if (s < 0 || s >= n_systems)
      throw std::invalid_argument(fmt::format("cut names system {} of {}", s, n_systems));
    if (!seen.insert(s).second)
      throw std::invalid_argument(fmt::format("cut repeats system {}", s));
  }
  if (static_cast<int>(seen.size()) != n_systems)
    throw std::invalid_argument("cut must mention every system exactly once");
}

Cut parse_cut(const std::string& text, int n_systems) {
  Cut cut;
  bool right = false;
  for (char ch : text) {
    if (ch == '|') {
      if (right) throw std::invalid_argument(fmt::format("cut '{}' has two separators", text));
      right = true;
      continue;
    }
    if (ch < 'A' || ch >= 'A' + n_systems)
      throw std::invalid_argument(
          fmt::format("cut '{}' names unknown system '{}' (have {})", text, ch, n_systems));
    (right ? cut.right : cut.left).push_back(ch - 'A');
  }
  if (!right) throw std::invalid_argument(fmt::format("cut '{}' is missing '|'", text));
  validate_cut(cut, n_systems);
  return cut;
}

ComplexMatrix realign(const ComplexMatrix& u, const std::vector<int>& dims, const Cut& cut) {
  check_operator_dims(u, dims);
  validate_cut(cut, static_cast<int>(dims.size()));
  Eigen::Index dl = side_dim(cut.left, dims);
  Eigen::Index dr = side_dim(cut.right, dims);
  ComplexMatrix r = ComplexMatrix::Zero(dl * dl, dr * dr);
  for (Eigen::Index row = 0; row < u.rows(); ++row) {
    std::vector<int> i = digits(row, dims);
    for (Eigen::Index col = 0; col < u.cols(); ++col) {
      std::vector<int> j = digits(col, dims);
      r(pair_index(cut.left, dims, i, j), pair_index(cut.right, dims, i, j)) = u(row, col);
    }
  }
  return r;
}

namespace {

// Fold one singular vector back into an operator on the given systems.
ComplexMatrix unvec_side(const ComplexVector& v, const std::vector<int>& systems,
                         const std::vector<int>& dims) {
  Eigen::Index d = side_dim(systems, dims);
  ComplexMatrix op = ComplexMatrix::Zero(d, d);
  std::vector<int> i(dims.size(), 0), j(dims.size(), 0);
  for (Eigen::Index idx = 0; idx < v.size(); ++idx) {
    Eigen::Index rem = idx;
    for (size_t t = systems.size(); t-- > 0;) {
      int s = systems[t];
      int pair = static_cast<int>(rem % (dims[s] * dims[s]));
      rem /= dims[s] * dims[s];
      i[s] = pair / dims[s];
      j[s] = pair % dims[s];
    }
    op(row_index(systems, dims, i), row_index(systems, dims, j)) = v(idx);
  }
  return op;
}

}  // namespace

BipartiteSchmidt bipartite_schmidt(const ComplexMatrix& u, const std::vector<int>& dims,
                                   const Cut& cut, double rel_tol) {
  ComplexMatrix r = realign(u, dims, cut);
  Svd dec = svd(r);
  BipartiteSchmidt out;
  out.rank = numerical_rank(dec.s, rel_tol);
  for (int m = 0; m < out.rank; ++m) {
    out.weights.push_back(dec.s(m));
    out.left_ops.push_back(unvec_side(dec.u.col(m), cut.left, dims));
    out.right_ops.push_back(unvec_side(dec.v.col(m).conjugate(), cut.right, dims));
  }
  return out;
}

ComplexMatrix reconstruct_bipartite(const BipartiteSchmidt& bs, const std::vector<int>& dims,
                                    const Cut& cut) {
  validate_cut(cut, static_cast<int>(dims.size()));
  Eigen::Index total = 1;
  for (int d : dims) total *= d;
  ComplexMatrix u = ComplexMatrix::Zero(total, total);
  for (Eigen::Index row = 0; row < total; ++row) {
    std::vector<int> i = digits(row, dims);
    Eigen::Index rl = row_index(cut.left, dims, i);
    Eigen::Index rr = row_index(cut.right, dims, i);
    for (Eigen::Index col = 0; col < total; ++col) {
      std::vector<int> j = digits(col, dims);
      Eigen::Index cl = row_index(cut.left, dims, j);
      Eigen::Index cr = row_index(cut.right, dims, j);
      Complex sum{0.0, 0.0};
      for (int m = 0; m < bs.rank; ++m)
        sum += bs.weights[m] * bs.left_ops[m](rl, cl) * bs.right_ops[m](rr, cr);
      u(row, col) = sum;
    }
  }
  return u;
}

Tensor3 operator_tensor3(const ComplexMatrix& u) {
  if (u.rows() != 8 || u.cols() != 8)
    throw std::invalid_argument(
        fmt::format("operator_tensor3 expects an 8x8 matrix, got {}x{}", u.rows(), u.cols()));
  Tensor3 t(4, 4, 4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        t.at(a, b, c) = u(4 * (a >> 1) + 2 * (b >> 1) + (c >> 1),
                          4 * (a & 1) + 2 * (b & 1) + (c & 1));
  return t;
}

std::array<int, 3> mode_ranks(const Tensor3& t, double rel_tol) {
  return {numerical_rank(mode_flatten(t, 1), rel_tol), numerical_rank(mode_flatten(t, 2), rel_tol),
          numerical_rank(mode_flatten(t, 3), rel_tol)};
}

int flattening_lower_bound(const Tensor3& t, double rel_tol) {
  auto r = mode_ranks(t, rel_tol);
  return std::max({r[0], r[1], r[2]});
}

double verify_decomposition(const Tensor3& t, const Decomposition& d) {
  Tensor3 rec = reconstruct_cp(d, t.dims());
  double sum = 0.0;
  for (int i = 0; i < t.dims()[0]; ++i)
    for (int j = 0; j < t.dims()[1]; ++j)
      for (int k = 0; k < t.dims()[2]; ++k) sum += std::norm(t.at(i, j, k) - rec.at(i, j, k));
  return std::sqrt(sum);
}

double verify_decomposition(const ComplexMatrix& u, const Decomposition& d) {
  return frobenius(u - reconstruct_matrix(d));
}

}  // namespace srank
