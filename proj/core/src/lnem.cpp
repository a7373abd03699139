// Copyright 2026 The netdesign Authors.
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

#include "netdesign/lnem.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <string>

#include "netdesign/error.hpp"

namespace netdesign {

namespace {

constexpr int kRankSampleSize = 1024;
constexpr std::uint64_t kRankSampleSeed = 0x6e6574646573ULL;

}  // namespace

ModelSpec::ModelSpec(const Network& net, int treatments, Criterion criterion,
                     Validity validity)
    : treatments_(treatments),
      total_treatments_(treatments + static_cast<int>(net.block_nodes().size())),
      criterion_(criterion),
      validity_(validity) {
  if (treatments < 2 || treatments > kMaxTreatments) {
    throw InvalidArgument("treatment count must lie in 2.." +
                          std::to_string(kMaxTreatments));
  }
  for (NodeId b : net.block_nodes()) {
    const int t = net.role(b).fixed_treatment;
    if (t <= treatments || t > total_treatments_) {
      throw InvalidArgument(
          "block node " + std::to_string(b + 1) + " carries treatment " +
          std::to_string(t) + ", expected one of " +
          std::to_string(treatments + 1) + ".." +
          std::to_string(total_treatments_));
    }
  }
  if (validity_ == Validity::kIdentified) reference_rank_ = SampleRank(net);
}

int ModelSpec::SampleRank(const Network& net) const {
  const std::size_t n = net.num_design_nodes();
  std::mt19937_64 rng(kRankSampleSeed);
  std::uniform_int_distribution<int> level(0, treatments_ - 1);
  Design x;
  x.levels.resize(n);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  int best = 0;
  for (int s = 0; s <= kRankSampleSize; ++s) {
    for (std::size_t d = 0; d < n; ++d) {
      // The first sample cycles through the treatments in node order.
      x.levels[d] = static_cast<Level>(
          s == 0 ? static_cast<int>(d) % treatments_ : level(rng));
    }
    const InformationMatrix info =
        information_matrix(build_model_matrix(net, x, *this));
    solver.compute(info, Eigen::EigenvaluesOnly);
    const auto& values = solver.eigenvalues();
    const double cutoff = kRankTolerance * values.cwiseAbs().maxCoeff();
    best = std::max(best, static_cast<int>((values.array() > cutoff).count()));
  }
  return best;
}

namespace {

std::vector<int> NodeTreatments(const Network& net) {
  std::vector<int> t(net.num_nodes(), -1);
  for (NodeId b : net.block_nodes()) {
    t[static_cast<std::size_t>(b)] = net.role(b).fixed_treatment - 1;
  }
  return t;
}

std::optional<double> Evaluate(
    const InformationMatrix& info, const ModelSpec& spec,
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>& solver) {
  const Eigen::Index p = info.rows();
  solver.compute(info, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("eigendecomposition of the information matrix failed");
  }
  const auto& values = solver.eigenvalues();
  const auto& vectors = solver.eigenvectors();
  const double largest =
      std::max(std::abs(values(0)), std::abs(values(p - 1)));
  if (!(largest > 0.0)) return std::nullopt;
  const double cutoff = kRankTolerance * largest;

  Eigen::Index first_kept = 0;  // eigenvalues ascend
  while (first_kept < p && values(first_kept) <= cutoff) ++first_kept;
  const Eigen::Index rank = p - first_kept;
  if (spec.validity() == Validity::kIdentified) {
    if (rank > spec.reference_rank()) {
      throw NumericalError("information rank " + std::to_string(rank) +
                           " exceeds the sampled attainable rank " +
                           std::to_string(spec.reference_rank()));
    }
    if (rank < spec.reference_rank()) return std::nullopt;
  }
  const auto basis = vectors.rightCols(rank);

  // Every tau_j - tau_l is estimable iff each unit vector on a tau column
  // lies in the row space, i.e. is fixed by the projector basis basis^T.
  const int q = spec.treatments() - 1;
  for (int j = 1; j <= q; ++j) {
    const Eigen::Index col = static_cast<Eigen::Index>(ModelSpec::tau_column(j));
    Eigen::VectorXd residual = -(basis * basis.row(col).transpose());
    residual(col) += 1.0;
    if (residual.norm() > kEstimabilityTolerance) return std::nullopt;
  }

  // Covariance of (tau_1..tau_{m-1}) under the generalized inverse.
  const auto tau_rows = basis.middleRows(1, q);
  const Eigen::VectorXd inv_values =
      values.tail(rank).cwiseInverse();
  const Eigen::MatrixXd cov =
      tau_rows * inv_values.asDiagonal() * tau_rows.transpose();

  if (spec.criterion() == Criterion::kDs) return cov.determinant();

  // Pairs (j, m) contribute Var(tau_j); pairs j < l < m the full difference.
  double sum = 0.0;
  for (int j = 0; j < q; ++j) {
    sum += cov(j, j);
    for (int l = j + 1; l < q; ++l) {
      sum += cov(j, j) + cov(l, l) - 2.0 * cov(j, l);
    }
  }
  const double m = spec.treatments();
  return 2.0 * sum / (m * (m - 1.0));
}

}  // namespace

Eigen::MatrixXd build_model_matrix(const Network& net, const Design& x,
                                   const ModelSpec& spec) {
  validate_design(x, net.num_design_nodes(), spec.treatments());
  std::vector<int> treatment = NodeTreatments(net);
  for (std::size_t d = 0; d < x.size(); ++d) {
    treatment[static_cast<std::size_t>(net.design_nodes()[d])] = x[d];
  }
  const int m = spec.treatments();
  Eigen::MatrixXd f = Eigen::MatrixXd::Zero(
      static_cast<Eigen::Index>(net.num_design_nodes()),
      static_cast<Eigen::Index>(spec.num_parameters()));
  Eigen::Index row = 0;
  for (NodeId i : net.design_nodes()) {
    f(row, 0) = 1.0;
    const int own = treatment[static_cast<std::size_t>(i)];
    if (own < m - 1) f(row, static_cast<Eigen::Index>(ModelSpec::tau_column(own + 1))) = 1.0;
    for (NodeId k : net.influencers(i)) {
      const int t = treatment[static_cast<std::size_t>(k)];
      f(row, static_cast<Eigen::Index>(spec.gamma_column(t + 1))) += 1.0;
    }
    ++row;
  }
  return f;
}

InformationMatrix information_matrix(const Eigen::MatrixXd& model_matrix) {
  return model_matrix.transpose() * model_matrix;
}

std::optional<double> evaluate_criterion(const InformationMatrix& info,
                                         const ModelSpec& spec) {
  if (info.rows() != static_cast<Eigen::Index>(spec.num_parameters()) ||
      info.cols() != info.rows()) {
    throw InvalidArgument("information matrix shape does not match the model");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(info.rows());
  return Evaluate(info, spec, solver);
}

std::optional<double> criterion_for_design(const Network& net, const Design& x,
                                           const ModelSpec& spec) {
  return evaluate_criterion(information_matrix(build_model_matrix(net, x, spec)),
                            spec);
}

CriterionEvaluator::CriterionEvaluator(const Network& net, const ModelSpec& spec)
    : net_(&net),
      spec_(spec),
      treatment_(NodeTreatments(net)),
      count_(static_cast<std::size_t>(spec.total_treatments()), 0),
      info_(static_cast<Eigen::Index>(spec.num_parameters()),
            static_cast<Eigen::Index>(spec.num_parameters())),
      solver_(static_cast<Eigen::Index>(spec.num_parameters())) {}

std::optional<double> CriterionEvaluator::operator()(const Design& x) {
  const Network& net = *net_;
  validate_design(x, net.num_design_nodes(), spec_.treatments());
  for (std::size_t d = 0; d < x.size(); ++d) {
    treatment_[static_cast<std::size_t>(net.design_nodes()[d])] = x[d];
  }
  const int m = spec_.treatments();
  info_.setZero();
  // Sparse row of F: (column, value) pairs.
  std::vector<std::pair<Eigen::Index, double>> row;
  row.reserve(2 + count_.size());
  for (NodeId i : net.design_nodes()) {
    row.clear();
    row.emplace_back(0, 1.0);
    const int own = treatment_[static_cast<std::size_t>(i)];
    if (own < m - 1) {
      row.emplace_back(static_cast<Eigen::Index>(ModelSpec::tau_column(own + 1)),
                       1.0);
    }
    for (NodeId k : net.influencers(i)) {
      const int t = treatment_[static_cast<std::size_t>(k)];
      if (count_[static_cast<std::size_t>(t)]++ == 0) touched_.push_back(t);
    }
    for (int t : touched_) {
      row.emplace_back(static_cast<Eigen::Index>(spec_.gamma_column(t + 1)),
                       static_cast<double>(count_[static_cast<std::size_t>(t)]));
      count_[static_cast<std::size_t>(t)] = 0;
    }
    touched_.clear();
    for (const auto& [a, va] : row) {
      for (const auto& [b, vb] : row) info_(a, b) += va * vb;
    }
  }
  return Evaluate(info_, spec_, solver_);
}

}  // namespace netdesign
