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

#include "bibeam/sdp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace bibeam {

namespace {

using Real = long double;
using Mat = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

constexpr Eigen::Index kMaxDim = 64;
constexpr Real kFeasTol = 1e-10;
constexpr Real kStepFraction = 0.98;
constexpr Real kInf = std::numeric_limits<Real>::infinity();

// tr(A B) for any square A, B.
Real trace_prod(const Mat& a, const Mat& b)
{
    return a.cwiseProduct(b.transpose()).sum();
}

// tr(A B) when both are symmetric.
Real trace_prod_sym(const Mat& a, const Mat& b)
{
    return a.cwiseProduct(b).sum();
}

// Largest t with M + t dM still PSD, given the Cholesky factor of M (PD).
Real max_psd_step(const Eigen::LLT<Mat>& chol, const Mat& dm)
{
    const Mat left = chol.matrixL().solve(dm);
    Mat w = chol.matrixL().solve(left.transpose());
    w = Real(0.5) * (w + w.transpose());
    Eigen::SelfAdjointEigenSolver<Mat> es(w, Eigen::EigenvaluesOnly);
    const Real lmin = es.eigenvalues()(0);
    return lmin >= 0 ? kInf : -1 / lmin;
}

Real max_lp_step(const Vec& v, const Vec& dv)
{
    Real t = kInf;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (dv(i) < 0)
            t = std::min(t, -v(i) / dv(i));
    return t;
}

template <typename M>
typename M::Scalar min_eigenvalue(const M& m)
{
    Eigen::SelfAdjointEigenSolver<M> es(0.5 * (m + m.transpose()), Eigen::EigenvaluesOnly);
    return es.eigenvalues()(0);
}

// y >= 0 with sum y_i A_i PSD and b^T y < 0 proves that no PSD X is feasible.
bool is_infeasibility_certificate(const std::vector<Mat>& a, const Vec& b, const Vec& y)
{
    const Real norm = y.norm();
    if (!(norm > 0) || !std::isfinite(static_cast<double>(norm)))
        return false;
    const Vec dir = y / norm;
    if (!(b.dot(dir) < Real(-1e-6)))
        return false;
    Mat combo = Mat::Zero(a.front().rows(), a.front().cols());
    for (std::size_t i = 0; i < a.size(); ++i)
        combo += dir(static_cast<Eigen::Index>(i)) * a[i];
    return min_eigenvalue(combo) >= Real(-1e-8);
}

}  // namespace

std::string_view to_string(SdpStatus status)
{
    switch (status) {
    case SdpStatus::Optimal:
        return "Optimal";
    case SdpStatus::MaxIter:
        return "MaxIter";
    case SdpStatus::Infeasible:
        return "Infeasible";
    }
    return "Unknown";
}

void SdpProblem::validate() const
{
    const auto n = c.rows();
    if (n == 0 || c.cols() != n)
        throw std::invalid_argument("SdpProblem.c: must be square and non-empty");
    if (n > kMaxDim)
        throw std::invalid_argument("SdpProblem.c: dimension above 64 is not supported");
    if (!c.allFinite() || symmetry_defect(c) > 1e-10)
        throw std::invalid_argument("SdpProblem.c: must be finite and symmetric");
    if (constraints.empty())
        throw std::invalid_argument("SdpProblem.constraints: at least one constraint required");
    for (std::size_t i = 0; i < constraints.size(); ++i) {
        const auto& con = constraints[i];
        const std::string where = "SdpProblem.constraints[" + std::to_string(i) + "]";
        if (con.a.rows() != n || con.a.cols() != n)
            throw std::invalid_argument(where + ".a: shape must match c");
        if (!con.a.allFinite() || symmetry_defect(con.a) > 1e-10)
            throw std::invalid_argument(where + ".a: must be finite and symmetric");
        if (!std::isfinite(con.b))
            throw std::invalid_argument(where + ".b: must be finite");
    }
}

SdpSolution solve_sdp(const SdpProblem& problem, double gap_tol, int max_iter)
{
    problem.validate();
    if (!(gap_tol > 0.0))
        throw std::invalid_argument("solve_sdp: gap_tol must be > 0");
    if (max_iter < 1)
        throw std::invalid_argument("solve_sdp: max_iter must be >= 1");

    const Eigen::Index n = problem.dim();
    const std::size_t k = problem.constraints.size();
    const auto kk = static_cast<Eigen::Index>(k);
    const Mat eye = Mat::Identity(n, n);

    // Normalized data.
    Real c_scale = problem.c.norm();
    if (!(c_scale > 0.0))
        c_scale = 1.0;
    const Mat c = (Real(0.5) * (problem.c + problem.c.transpose()) / c_scale).cast<Real>();
    std::vector<Mat> a(k);
    Vec b(kk);
    Vec a_scale(kk);
    for (std::size_t i = 0; i < k; ++i) {
        const auto& con = problem.constraints[i];
        Real s = con.a.norm();
        if (!(s > 0.0))
            s = 1.0;
        a[i] = (Real(0.5) * (con.a + con.a.transpose()) / s).cast<Real>();
        b(static_cast<Eigen::Index>(i)) = con.b / s;
        a_scale(static_cast<Eigen::Index>(i)) = s;
    }

    // Primal scale: X is solved for b / b_scale and scaled back, with the
    // smallest non-zero bound mapped to one.
    Real b_scale = kInf;
    for (Eigen::Index i = 0; i < kk; ++i)
        if (b(i) != 0)
            b_scale = std::min(b_scale, std::abs(b(i)));
    if (!std::isfinite(static_cast<double>(b_scale)))
        b_scale = 1;
    b /= b_scale;

    SdpSolution sol;
    for (std::size_t i = 0; i < k; ++i) {
        if (problem.constraints[i].a.norm() == 0.0 && problem.constraints[i].b < 0.0) {
            sol.status = SdpStatus::Infeasible;
            sol.y = RVec::Unit(kk, static_cast<Eigen::Index>(i));
            return sol;
        }
    }

    // Interior starting point: X = xi I sits inside every constraint whose
    // matrix has positive trace and positive bound (the power budget).
    Real xi = 1.0;
    for (std::size_t i = 0; i < k; ++i) {
        const Real tr = a[i].trace();
        const Real bi = b(static_cast<Eigen::Index>(i));
        if (tr > 0.0 && bi > 0.0)
            xi = std::min(xi, bi / (2 * tr));
    }
    Mat x = xi * eye;
    Vec y = Vec::Ones(kk);
    Mat dual_combo = -c;
    for (std::size_t i = 0; i < k; ++i)
        dual_combo += a[i];
    const Real zeta = 1.0 + dual_combo.norm();
    Mat z = zeta * eye;
    Vec s(kk);
    for (std::size_t i = 0; i < k; ++i) {
        const auto ii = static_cast<Eigen::Index>(i);
        s(ii) = std::max(b(ii) - trace_prod_sym(a[i], x), xi * zeta);
    }

    const Real dof = static_cast<Real>(n + kk);
    int iter = 0;
    for (;; ++iter) {
        Vec rp(kk);
        for (std::size_t i = 0; i < k; ++i) {
            const auto ii = static_cast<Eigen::Index>(i);
            rp(ii) = b(ii) - trace_prod_sym(a[i], x) - s(ii);
        }
        Mat rd = -c - z;
        for (std::size_t i = 0; i < k; ++i)
            rd += y(static_cast<Eigen::Index>(i)) * a[i];

        const Real pobj = trace_prod_sym(c, x);
        const Real dobj = b.dot(y);
        const Real comp = trace_prod_sym(x, z) + s.dot(y);
        const Real mu = comp / dof;
        const Real denom = 1.0 + std::abs(pobj) + std::abs(dobj);
        const Real gap = std::abs(dobj - pobj) / denom;
        const Real comp_rel = comp / denom;
        const Real pinf = rp.norm() / (1.0 + b.norm());
        const Real dinf = rd.norm() / (1.0 + c.norm());
        sol.duality_gap = std::max(gap, comp_rel);
        sol.dual_residual = dinf;
        sol.iterations = iter;

        if (gap <= gap_tol && comp_rel <= gap_tol && pinf <= kFeasTol && dinf <= kFeasTol) {
            sol.status = SdpStatus::Optimal;
            break;
        }
        if (is_infeasibility_certificate(a, b, y)) {
            sol.status = SdpStatus::Infeasible;
            break;
        }
        if (iter >= max_iter) {
            sol.status = SdpStatus::MaxIter;
            break;
        }

        const Eigen::LLT<Mat> llt_x(x);
        const Eigen::LLT<Mat> llt_z(z);
        if (llt_x.info() != Eigen::Success || llt_z.info() != Eigen::Success) {
            sol.status = SdpStatus::MaxIter;
            break;
        }
        const Mat z_inv = llt_z.solve(eye);

        // Schur complement of the HKM system, k x k.
        std::vector<Mat> x_a_zinv(k);
        for (std::size_t j = 0; j < k; ++j)
            x_a_zinv[j] = x * a[j] * z_inv;
        Mat schur(kk, kk);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                schur(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = trace_prod(a[i], x_a_zinv[j]);
        schur = 0.5 * (schur + schur.transpose());
        for (Eigen::Index i = 0; i < kk; ++i)
            schur(i, i) += s(i) / y(i);
        const Eigen::LDLT<Mat> schur_fact(schur);
        if (schur_fact.info() != Eigen::Success) {
            sol.status = SdpStatus::MaxIter;
            break;
        }
        const Mat x_rd_zinv = x * rd * z_inv;

        // Newton direction for complementarity targets (rc, rc_lp).
        auto direction = [&](const Mat& rc, const Vec& rc_lp, Mat& dx, Vec& ds, Vec& dy, Mat& dz) {
            const Mat rc_zinv = rc * z_inv;
            Vec rhs(kk);
            for (std::size_t i = 0; i < k; ++i) {
                const auto ii = static_cast<Eigen::Index>(i);
                rhs(ii) = trace_prod(a[i], rc_zinv) - trace_prod(a[i], x_rd_zinv) + rc_lp(ii) / y(ii) - rp(ii);
            }
            dy = schur_fact.solve(rhs);
            dz = rd;
            for (std::size_t j = 0; j < k; ++j)
                dz += dy(static_cast<Eigen::Index>(j)) * a[j];
            const Mat dx_raw = rc_zinv - x * dz * z_inv;
            dx = 0.5 * (dx_raw + dx_raw.transpose());
            ds = (rc_lp - s.cwiseProduct(dy)).cwiseQuotient(y);
        };
        auto step_lengths = [&](const Mat& dx, const Vec& ds, const Vec& dy, const Mat& dz, Real frac) {
            const Real tp = std::min(max_psd_step(llt_x, dx), max_lp_step(s, ds));
            const Real td = std::min(max_psd_step(llt_z, dz), max_lp_step(y, dy));
            return std::pair{std::min(Real(1), frac * tp), std::min(Real(1), frac * td)};
        };

        const Mat xz = x * z;
        Mat dx_a, dz_a;
        Vec ds_a, dy_a;
        direction(-xz, -s.cwiseProduct(y), dx_a, ds_a, dy_a, dz_a);
        const auto [ap_a, ad_a] = step_lengths(dx_a, ds_a, dy_a, dz_a, 1.0);
        const Real mu_aff = (trace_prod_sym(x + ap_a * dx_a, z + ad_a * dz_a) +
                               (s + ap_a * ds_a).dot(y + ad_a * dy_a)) /
                              dof;
        const Real sigma = std::clamp(std::pow(mu_aff / mu, Real(3)), Real(0), Real(1));

        const Mat rc = sigma * mu * eye - xz - dx_a * dz_a;
        const Vec rc_lp = Vec::Constant(kk, sigma * mu) - s.cwiseProduct(y) - ds_a.cwiseProduct(dy_a);
        Mat dx, dz;
        Vec ds, dy;
        direction(rc, rc_lp, dx, ds, dy, dz);
        const auto [ap, ad] = step_lengths(dx, ds, dy, dz, kStepFraction);
        x += ap * dx;
        s += ap * ds;
        y += ad * dy;
        z += ad * dz;
        x = 0.5 * (x + x.transpose());
        z = 0.5 * (z + z.transpose());
    }

    sol.y = RVec(kk);
    for (Eigen::Index i = 0; i < kk; ++i)
        sol.y(i) = static_cast<double>(y(i) * c_scale / a_scale(i));
    if (sol.status == SdpStatus::Infeasible)
        return sol;

    sol.x = (b_scale * x).cast<double>();
    sol.primal_objective = problem.c.cwiseProduct(sol.x).sum();
    sol.dual_objective = 0.0;
    sol.primal_residual = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        const auto& con = problem.constraints[i];
        sol.dual_objective += con.b * sol.y(static_cast<Eigen::Index>(i));
        const double viol = con.a.cwiseProduct(sol.x).sum() - con.b;
        sol.primal_residual = std::max(sol.primal_residual, std::max(0.0, viol) / std::max(1.0, std::abs(con.b)));
    }
    sol.min_eigenvalue = min_eigenvalue(sol.x);
    return sol;
}

}  // namespace bibeam
