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

#ifndef BIBEAM_NUMERICS_HPP
#define BIBEAM_NUMERICS_HPP

#include <Eigen/Dense>

#include <complex>

namespace bibeam {

using cplx = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;

/// Real embedding of a complex matrix: the 2N x 2M block matrix
/// [Re(H) -Im(H); Im(H) Re(H)]. For x' = real_embed_vector(x) the product
/// satisfies G x' = real_embed_vector(H x).
RMat real_embed_matrix(const CMat& h);

/// Stacks [Re(x); Im(x)].
RVec real_embed_vector(const CVec& x);

/// Inverse of real_embed_vector: first half real parts, second half
/// imaginary parts. Throws std::invalid_argument on odd length.
CVec complex_reassemble(const RVec& x_prime);

/// Eigenpairs of a real symmetric matrix, eigenvalues in non-increasing
/// order and orthonormal eigenvectors in the matching columns.
struct SymEig {
    RVec values;
    RMat vectors;
};

/// Relative asymmetry ||S - S^T||_max / max(1, ||S||_max).
double symmetry_defect(const RMat& s);

/// Throws std::invalid_argument when the input is not square or its
/// symmetry defect exceeds 1e-10. Repeated eigenvalues get an arbitrary
/// orthonormal basis of their eigenspace.
SymEig sym_eig_desc(const RMat& s);

}  // namespace bibeam

#endif  // BIBEAM_NUMERICS_HPP
