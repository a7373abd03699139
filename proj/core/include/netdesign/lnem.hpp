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

#ifndef NETDESIGN_LNEM_HPP_
#define NETDESIGN_LNEM_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "netdesign/design.hpp"
#include "netdesign/network.hpp"

namespace netdesign {

// Linear network effects model
//
//   Y_i = mu + tau_{t(i)} + sum_k A_ik gamma_{t(k)} + eps_i,
//
// with tau_m = 0 and i.i.d. errors of unit variance. Block nodes carry
// pseudo-treatments m+1.. whose gamma terms act as block effects.

enum class Criterion {
  kAs,  // average variance of all pairwise treatment differences
  kDs,  // determinant of the covariance of tau_j - tau_m, j < m
};

// Which designs count as evaluable.
enum class Validity {
  // Every tau_j - tau_l is estimable; nuisance parameters may be aliased.
  kEstimableContrasts,
  // The information matrix reaches the largest rank the network allows, so
  // every parameter that any design could identify is identified. On
  // networks without block nodes this means F^T F is nonsingular.
  kIdentified,
};

// Singular values below this fraction of the largest count as zero.
inline constexpr double kRankTolerance = 1e-8;
// Largest residual norm of a unit contrast projected onto the row space of
// the information matrix that still counts as estimable.
inline constexpr double kEstimabilityTolerance = 1e-6;

class ModelSpec {
 public:
  // Throws InvalidArgument unless m >= 2 and the network's block nodes carry
  // exactly the pseudo-treatments m+1..m+b.
  // With Validity::kIdentified the attainable rank is estimated once, as
  // the largest rank over a fixed sample of designs.
  ModelSpec(const Network& net, int treatments,
            Criterion criterion = Criterion::kAs,
            Validity validity = Validity::kEstimableContrasts);

  int treatments() const { return treatments_; }
  int total_treatments() const { return total_treatments_; }
  Criterion criterion() const { return criterion_; }
  Validity validity() const { return validity_; }
  // Attainable information rank; 0 unless validity is kIdentified.
  int reference_rank() const { return reference_rank_; }
  // Columns of the model matrix: mu, tau_1..tau_{m-1}, gamma_1..gamma_T.
  std::size_t num_parameters() const {
    return static_cast<std::size_t>(treatments_ + total_treatments_);
  }
  // Column index of tau_j (1-based j < m) and gamma_t (1-based t <= T).
  static std::size_t tau_column(int j) { return static_cast<std::size_t>(j); }
  std::size_t gamma_column(int t) const {
    return static_cast<std::size_t>(treatments_ + t - 1);
  }

 private:
  int SampleRank(const Network& net) const;

  int treatments_;
  int total_treatments_;
  Criterion criterion_;
  Validity validity_;
  int reference_rank_ = 0;
};

using InformationMatrix = Eigen::MatrixXd;

// Model matrix F: one row per measurable node in ascending order, columns
// as in ModelSpec. Row i of the gamma block counts i's influencers per
// treatment, block pseudo-treatments included.
Eigen::MatrixXd build_model_matrix(const Network& net, const Design& x,
                                   const ModelSpec& spec);

// F^T F.
InformationMatrix information_matrix(const Eigen::MatrixXd& model_matrix);

// Criterion value at sigma^2 = 1, lower is better. Uses an eigendecomposition
// generalized inverse; returns nullopt (INVALID) when some tau_j - tau_l is
// not estimable. Throws NumericalError if the decomposition fails.
std::optional<double> evaluate_criterion(const InformationMatrix& info,
                                         const ModelSpec& spec);

// evaluate_criterion(information_matrix(build_model_matrix(net, x, spec))).
std::optional<double> criterion_for_design(const Network& net, const Design& x,
                                           const ModelSpec& spec);

// Reusable evaluator for search loops: accumulates F^T F straight from the
// network without materialising F and keeps its decomposition workspace.
// Produces bit-identical values to criterion_for_design. Not thread-safe;
// give each worker its own copy.
class CriterionEvaluator {
 public:
  CriterionEvaluator(const Network& net, const ModelSpec& spec);

  std::optional<double> operator()(const Design& x);
  const InformationMatrix& last_information() const { return info_; }
  const ModelSpec& spec() const { return spec_; }

 private:
  const Network* net_;
  ModelSpec spec_;
  std::vector<int> treatment_;  // 0-based treatment per node
  std::vector<int> count_;
  std::vector<int> touched_;
  InformationMatrix info_;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver_;
};

}  // namespace netdesign

#endif  // NETDESIGN_LNEM_HPP_
