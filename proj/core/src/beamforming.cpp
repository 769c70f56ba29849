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

#include "bibeam/beamforming.hpp"

#include "bibeam/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bibeam {

namespace {

constexpr double kDegenerateTol = 1e-6;
constexpr double kZeroObjective = 1e-8;

RMat gram(const CMat& h)
{
    const RMat g = real_embed_matrix(h);
    const RMat m = g.transpose() * g;
    return 0.5 * (m + m.transpose());
}

// Eigenvalues of an embedded Hermitian matrix come in equal pairs, so the
// complex rank-one test compares the third real eigenvalue with the first.
double lifted_rank_ratio(const RVec& desc_values)
{
    if (desc_values.size() < 3 || !(desc_values(0) > 0.0))
        return 0.0;
    return std::max(0.0, desc_values(2) / desc_values(0));
}

// Dominant eigenvector of basis^T m basis, mapped back through basis.
RVec best_direction(const RMat& basis, const RMat& m)
{
    if (basis.cols() == 1)
        return basis.col(0).normalized();
    const RMat projected = basis.transpose() * m * basis;
    const SymEig eig = sym_eig_desc(0.5 * (projected + projected.transpose()));
    return (basis * eig.vectors.col(0)).normalized();
}

// Direction minimizing |H_DL x|^2 / |H_BD x|^2 for the rank-one cascade:
// (H_DL^H H_DL + delta I)^-1 conj(h_c), with a tiny ridge so that a null
// space of H_DL is handled too.
CVec min_eta_direction(const ChannelSet& channels)
{
    CMat q = channels.h_dl.adjoint() * channels.h_dl;
    const double ridge = 1e-13 * std::max(q.diagonal().real().maxCoeff(), std::numeric_limits<double>::min());
    q.diagonal().array() += ridge;
    const CVec a = channels.h_c.conjugate();
    return q.ldlt().solve(a);
}

// The dominant eigenvector can overshoot the eta constraint slightly when
// the relaxed solution carries a small higher-rank remainder. Moves x along
// the segment towards the minimum-eta direction until the constraint holds.
void restore_feasibility(CVec& x, const ChannelSet& channels, double alpha_linear, double p_max)
{
    auto excess = [&](const CVec& v) {
        return (channels.h_dl * v).squaredNorm() - alpha_linear * (channels.h_bd * v).squaredNorm();
    };
    if (excess(x) <= 0.0)
        return;
    CVec target = min_eta_direction(channels);
    // Align the global phase so the segment does not pass through zero.
    const cplx overlap = target.dot(x);
    if (std::abs(overlap) > 0.0)
        target *= overlap / std::abs(overlap);
    target *= x.norm() / target.norm();
    if (excess(target) > 0.0)
        return;
    auto blend = [&](double t) {
        const CVec v = (1.0 - t) * x + t * target;
        return CVec(std::sqrt(p_max) * v / v.norm());
    };
    double lo = 0.0;
    double hi = 1.0;
    for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (excess(blend(mid)) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    x = blend(hi);
}

void fill_metrics(BeamformerOutput& out, const ChannelSet& channels)
{
    out.objective = (channels.h_bd * out.x).squaredNorm();
    out.achieved_eta_db = eta_db(channels, out.x);
}

}  // namespace

std::string_view to_string(BeamMethod method)
{
    switch (method) {
    case BeamMethod::Mrt:
        return "MRT";
    case BeamMethod::Sdr:
        return "SDR";
    case BeamMethod::NullSpace:
        return "NullSpace";
    }
    return "Unknown";
}

void normalize_phase(CVec& x)
{
    if (x.size() == 0)
        return;
    Eigen::Index best = 0;
    double best_mag = std::abs(x(0));
    for (Eigen::Index i = 1; i < x.size(); ++i) {
        const double mag = std::abs(x(i));
        if (mag > best_mag) {
            best = i;
            best_mag = mag;
        }
    }
    if (best_mag > 0.0)
        x *= std::conj(x(best)) / best_mag;
}

BeamformerOutput mrt(const CVec& h_c, double p_max)
{
    const double norm = h_c.norm();
    if (!(norm > 0.0))
        throw std::invalid_argument("mrt: zero channel");
    if (!(p_max > 0.0))
        throw std::invalid_argument("mrt: p_max must be > 0");
    BeamformerOutput out;
    out.method = BeamMethod::Mrt;
    out.x = std::sqrt(p_max) * h_c.conjugate() / norm;
    return out;
}

BeamformerOutput mrt(const ChannelSet& channels, double p_max)
{
    BeamformerOutput out = mrt(channels.h_c, p_max);
    fill_metrics(out, channels);
    return out;
}

SdpProblem build_sdr_problem(const ChannelSet& channels, double alpha_linear, double p_max)
{
    if (!(alpha_linear >= 0.0) || !std::isfinite(alpha_linear))
        throw std::invalid_argument("build_sdr_problem: alpha must be finite and >= 0");
    if (!(p_max > 0.0))
        throw std::invalid_argument("build_sdr_problem: p_max must be > 0");
    const RMat m_bd = gram(channels.h_bd);
    const RMat m_dl = gram(channels.h_dl);
    const auto dim = m_bd.rows();

    SdpProblem problem;
    problem.c = m_bd;
    problem.constraints.push_back({m_dl - alpha_linear * m_bd, 0.0});
    problem.constraints.push_back({RMat::Identity(dim, dim), p_max});
    return problem;
}

BeamformerOutput sdr_beamformer(const ChannelSet& channels, double alpha_db, double p_max, const SdrOptions& options)
{
    if (!std::isfinite(alpha_db))
        throw std::invalid_argument("sdr_beamformer: alpha_db must be finite (use null_dli_beamformer for -inf)");
    const double alpha_linear = std::pow(10.0, alpha_db / 10.0);
    const SdpProblem problem = build_sdr_problem(channels, alpha_linear, p_max);
    const SdpSolution sol = solve_sdp(problem, options.gap_tol, options.max_iter);
    if (sol.status != SdpStatus::Optimal)
        throw BeamformingError("sdr_beamformer: relaxation solve ended with status " +
                                   std::string(to_string(sol.status)),
                               sol.status);

    // Below the smallest achievable eta only x = 0 is feasible.
    const double mrt_objective = p_max * channels.h_c.squaredNorm() * channels.h_r.squaredNorm();
    if (!(sol.primal_objective > kZeroObjective * mrt_objective))
        throw BeamformingError("sdr_beamformer: no non-zero beamformer reaches eta <= " + std::to_string(alpha_db) +
                                   " dB",
                               SdpStatus::Infeasible);

    const SymEig eig = sym_eig_desc(sol.x);
    const double top = eig.values(0);
    Eigen::Index degenerate = 1;
    while (degenerate < eig.values.size() && eig.values(degenerate) >= top * (1.0 - kDegenerateTol))
        ++degenerate;
    const RVec q = best_direction(eig.vectors.leftCols(degenerate), problem.c);

    BeamformerOutput out;
    out.method = BeamMethod::Sdr;
    out.alpha_db = alpha_db;
    out.x = complex_reassemble(std::sqrt(p_max) * q);
    restore_feasibility(out.x, channels, alpha_linear, p_max);
    normalize_phase(out.x);
    out.rank_ratio = lifted_rank_ratio(eig.values);
    out.tightness_warning = out.rank_ratio > kRankWarning;
    out.sdp_iterations = sol.iterations;
    out.duality_gap = sol.duality_gap;
    out.constraint_residual = sol.primal_residual;
    fill_metrics(out, channels);
    return out;
}

BeamformerOutput null_dli_beamformer(const ChannelSet& channels, double p_max, double eps_rel)
{
    if (!(p_max > 0.0))
        throw std::invalid_argument("null_dli_beamformer: p_max must be > 0");
    if (!(eps_rel >= 0.0))
        throw std::invalid_argument("null_dli_beamformer: eps_rel must be >= 0");
    const SymEig dl = sym_eig_desc(gram(channels.h_dl));
    const double threshold = eps_rel * std::max(0.0, dl.values(0));

    std::vector<Eigen::Index> keep;
    for (Eigen::Index i = 0; i < dl.values.size(); ++i)
        if (dl.values(i) <= threshold)
            keep.push_back(i);
    if (keep.empty())
        throw std::invalid_argument("null_dli_beamformer: no eigenvalue of M_DL below eps_rel * lambda_max; "
                                    "increase eps_rel");
    RMat basis(dl.vectors.rows(), static_cast<Eigen::Index>(keep.size()));
    for (std::size_t j = 0; j < keep.size(); ++j)
        basis.col(static_cast<Eigen::Index>(j)) = dl.vectors.col(keep[j]);

    const RVec q = best_direction(basis, gram(channels.h_bd));

    BeamformerOutput out;
    out.method = BeamMethod::NullSpace;
    out.alpha_db = -std::numeric_limits<double>::infinity();
    out.x = complex_reassemble(std::sqrt(p_max) * q);
    normalize_phase(out.x);
    fill_metrics(out, channels);
    return out;
}

BeamformerOutput design_beamformer(const ChannelSet& channels, double alpha_db, double p_max,
                                   const SdrOptions& options)
{
    if (alpha_db == -std::numeric_limits<double>::infinity())
        return null_dli_beamformer(channels, p_max);
    return sdr_beamformer(channels, alpha_db, p_max, options);
}

}  // namespace bibeam
