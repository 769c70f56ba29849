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

#include "oracles.hpp"

#include <doctest.h>

using namespace bibeam;

TEST_CASE("real_embed_matrix block layout")
{
    CHECK(real_embed_matrix(CMat::Constant(1, 1, cplx(1.0, 0.0))) == RMat::Identity(2, 2));

    RMat rot(2, 2);
    rot << 0.0, -1.0, 1.0, 0.0;
    CHECK(real_embed_matrix(CMat::Constant(1, 1, cplx(0.0, 1.0))) == rot);

    oracle::Rng rng(11);
    const CMat h = rng.cmat(3, 2);
    const RMat g = real_embed_matrix(h);
    REQUIRE(g.rows() == 6);
    REQUIRE(g.cols() == 4);
    for (Eigen::Index i = 0; i < 3; ++i) {
        for (Eigen::Index j = 0; j < 2; ++j) {
            CHECK(g(i, j) == h(i, j).real());
            CHECK(g(i, j + 2) == -h(i, j).imag());
            CHECK(g(i + 3, j) == h(i, j).imag());
            CHECK(g(i + 3, j + 2) == h(i, j).real());
        }
    }
}

TEST_CASE("embedding preserves products and norms")
{
    oracle::Rng rng(12);
    for (int trial = 0; trial < 500; ++trial) {
        const auto rows = rng.integer(1, 8);
        const auto cols = rng.integer(1, 8);
        const CMat h = rng.cmat(rows, cols);
        const CVec x = rng.cvec(cols);
        const CVec hx = oracle::complex_product(h, x);
        const RVec gx = real_embed_matrix(h) * real_embed_vector(x);
        CHECK(std::abs(gx.norm() - hx.norm()) <= 1e-12 * hx.norm());
        CHECK((gx - real_embed_vector(hx)).norm() <= 1e-12 * hx.norm());
    }
}

TEST_CASE("real_embed_vector and complex_reassemble")
{
    CVec x(1);
    x << cplx(1.0, 2.0);
    RVec expect(2);
    expect << 1.0, 2.0;
    CHECK(real_embed_vector(x) == expect);
    CHECK(complex_reassemble(expect) == x);

    CHECK(real_embed_vector(CVec::Zero(4)) == RVec::Zero(8));
    CHECK(complex_reassemble(RVec::Zero(6)) == CVec::Zero(3));

    oracle::Rng rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const CVec v = rng.cvec(rng.integer(1, 20));
        CHECK(complex_reassemble(real_embed_vector(v)) == v);
        const RVec r = real_embed_vector(v);
        CHECK(real_embed_vector(complex_reassemble(r)) == r);
    }

    CHECK_THROWS_AS(complex_reassemble(RVec::Zero(3)), std::invalid_argument);
}

TEST_CASE("sym_eig_desc small cases")
{
    const SymEig id = sym_eig_desc(RMat::Identity(2, 2));
    CHECK(id.values(0) == doctest::Approx(1.0));
    CHECK(id.values(1) == doctest::Approx(1.0));

    RMat d = RMat::Zero(2, 2);
    d(0, 0) = 1.0;
    d(1, 1) = 3.0;
    const SymEig e = sym_eig_desc(d);
    CHECK(e.values(0) == doctest::Approx(3.0));
    CHECK(e.values(1) == doctest::Approx(1.0));
    CHECK(std::abs(e.vectors(1, 0)) == doctest::Approx(1.0));
    CHECK(std::abs(e.vectors(0, 1)) == doctest::Approx(1.0));
}

TEST_CASE("sym_eig_desc reconstruction, orthonormality, ordering, trace")
{
    oracle::Rng rng(14);
    for (int trial = 0; trial < 50; ++trial) {
        const Eigen::Index n = trial == 0 ? 32 : rng.integer(1, 32);
        const RMat s = rng.symmetric(n) * std::exp(rng.uniform(-5.0, 5.0));
        const SymEig eig = sym_eig_desc(s);
        const RMat recon = eig.vectors * eig.values.asDiagonal() * eig.vectors.transpose();
        CHECK((recon - s).norm() <= 1e-9 * s.norm());
        CHECK((eig.vectors.transpose() * eig.vectors - RMat::Identity(n, n)).cwiseAbs().maxCoeff() <= 1e-10);
        for (Eigen::Index i = 1; i < n; ++i)
            CHECK(eig.values(i) <= eig.values(i - 1));
        CHECK(std::abs(eig.values.sum() - s.trace()) <= 1e-10 * std::max(1.0, s.cwiseAbs().sum()));
    }
}

TEST_CASE("sym_eig_desc rejects bad input")
{
    RMat a = RMat::Identity(3, 3);
    a(0, 1) = 1e-3;
    CHECK_THROWS_AS(sym_eig_desc(a), std::invalid_argument);
    CHECK_THROWS_AS(sym_eig_desc(RMat::Zero(2, 3)), std::invalid_argument);

    a(0, 1) = 1e-12;
    CHECK_NOTHROW(sym_eig_desc(a));
}
