// SPDX-License-Identifier: Apache-2.0
//
// bibeam: transmit beamforming for multi-antenna bistatic backscatter links
// Copyright (C) 2026 The bibeam Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "bibeam/numerics.hpp"

#include <algorithm>
#include <stdexcept>

namespace bibeam {

RMat real_embed_matrix(const CMat& h)
{
    const auto rows = h.rows();
    const auto cols = h.cols();
    RMat g(2 * rows, 2 * cols);
    g.topLeftCorner(rows, cols) = h.real();
    g.topRightCorner(rows, cols) = -h.imag();
    g.bottomLeftCorner(rows, cols) = h.imag();
    g.bottomRightCorner(rows, cols) = h.real();
    return g;
}

RVec real_embed_vector(const CVec& x)
{
    const auto m = x.size();
    RVec out(2 * m);
    out.head(m) = x.real();
    out.tail(m) = x.imag();
    return out;
}

CVec complex_reassemble(const RVec& x_prime)
{
    if (x_prime.size() % 2 != 0)
        throw std::invalid_argument("complex_reassemble: odd-length real vector");
    const auto m = x_prime.size() / 2;
    CVec x(m);
    for (Eigen::Index i = 0; i < m; ++i)
        x(i) = cplx(x_prime(i), x_prime(m + i));
    return x;
}

double symmetry_defect(const RMat& s)
{
    if (s.size() == 0)
        return 0.0;
    const double scale = std::max(1.0, s.cwiseAbs().maxCoeff());
    return (s - s.transpose()).cwiseAbs().maxCoeff() / scale;
}

SymEig sym_eig_desc(const RMat& s)
{
    if (s.rows() != s.cols() || s.rows() == 0)
        throw std::invalid_argument("sym_eig_desc: matrix must be square and non-empty");
    if (symmetry_defect(s) > 1e-10)
        throw std::invalid_argument("sym_eig_desc: matrix is not symmetric");

    // Eigen reads the lower triangle only; symmetrize so both halves count.
    const RMat sym = 0.5 * (s + s.transpose());
    Eigen::SelfAdjointEigenSolver<RMat> solver(sym);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("sym_eig_desc: eigensolver did not converge");

    SymEig out;
    out.values = solver.eigenvalues().reverse();
    out.vectors = solver.eigenvectors().rowwise().reverse();
    return out;
}

}  // namespace bibeam
