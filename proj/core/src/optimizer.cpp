// Copyright 2026 The kadapt Authors
// SPDX-License-Identifier: Apache-2.0

#include "kadapt/optimizer.hpp"

#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "kadapt/error.hpp"

namespace kadapt {

void OptimizerConfig::validate() const {
  if (max_iterations < 1) throw StructureError("optimizer needs max_iterations >= 1");
  if (!(f_tolerance > 0.0)) throw StructureError("optimizer needs f_tolerance > 0");
  if (!(initial_step > 0.0)) throw StructureError("optimizer needs initial_step > 0");
}

namespace {

// Powell's constants: acceptable simplex edges lie within [alpha, beta] * rho,
// geometry steps have length gamma * rho, and a vertex farther than delta * rho
// from a trial point is preferred for replacement.
constexpr double kAlpha = 0.25;
constexpr double kBeta = 2.1;
constexpr double kGamma = 0.5;
constexpr double kDelta = 1.1;

class Run {
 public:
  Run(const Objective& f, std::span<const double> x0, const OptimizerConfig& cfg)
      : f_(f), cfg_(cfg), n_(static_cast<Eigen::Index>(x0.size())) {
    base_ = Eigen::Map<const Eigen::VectorXd>(x0.data(), n_);
    fbase_ = evaluate(base_);
  }

  OptimizationOutcome solve() {
    rho_ = cfg_.initial_step;
    rho_end_ = std::min(cfg_.f_tolerance, rho_);
    if (n_ == 0) return finish(true);

    if (!build_simplex()) return finish(false);

    while (out_.n_iterations < cfg_.max_iterations) {
      Eigen::MatrixXd w;  // columns: dual basis, v_i . w_j = delta_ij
      if (!invert(w)) {
        if (!build_simplex()) return finish(false);
        continue;
      }
      const Eigen::VectorXd g = w * (fv_.array() - fbase_).matrix();
      const double gnorm = g.norm();

      if (gnorm > 0.0 && std::isfinite(gnorm)) {
        const Eigen::VectorXd d = -rho_ * g / gnorm;
        const double ftrial = step(base_ + d);
        const double predicted = rho_ * gnorm;
        const double ratio = (fbase_ - ftrial) / predicted;
        replace_after_trust_step(w, d, ftrial);
        if (ratio >= 0.1) continue;
        if (out_.n_iterations >= cfg_.max_iterations) break;
        if (!invert(w)) continue;
      }

      // The trust-region step did not pay off: repair the simplex if it is
      // badly shaped at this scale, otherwise shrink rho.
      Eigen::Index jdrop = -1;
      double worst_edge = kBeta * rho_;
      for (Eigen::Index j = 0; j < n_; ++j) {
        const double edge = v_.row(j).norm();
        if (edge > worst_edge) {
          worst_edge = edge;
          jdrop = j;
        }
      }
      if (jdrop < 0) {
        double thinnest = kAlpha * rho_;
        for (Eigen::Index j = 0; j < n_; ++j) {
          const double dist = 1.0 / w.col(j).norm();
          if (dist < thinnest) {
            thinnest = dist;
            jdrop = j;
          }
        }
      }
      if (jdrop >= 0) {
        Eigen::VectorXd d = w.col(jdrop).normalized() * (kGamma * rho_);
        if (g.dot(d) > 0.0) d = -d;
        const double fnew = step(base_ + d);
        v_.row(jdrop) = d.transpose();
        fv_(jdrop) = fnew;
        rebase();
        continue;
      }

      if (rho_ <= rho_end_) return finish(true);
      rho_ *= 0.5;
      if (rho_ <= 1.5 * rho_end_) rho_ = rho_end_;
    }
    return finish(false);
  }

 private:
  double evaluate(const Eigen::VectorXd& x) {
    const double value = f_(std::span<const double>(x.data(), static_cast<std::size_t>(x.size())));
    ++out_.n_evaluations;
    if (!std::isfinite(value)) {
      throw ComputationError("objective returned a non-finite value at evaluation " +
                             std::to_string(out_.n_evaluations));
    }
    return value;
  }

  // One iteration: evaluate a new point and record the best-so-far value.
  double step(const Eigen::VectorXd& x) {
    const double value = evaluate(x);
    ++out_.n_iterations;
    const double best = std::min(fbase_, value);
    out_.best_trace.push_back(out_.best_trace.empty() ? best
                                                      : std::min(out_.best_trace.back(), best));
    return value;
  }

  bool build_simplex() {
    v_ = Eigen::MatrixXd::Identity(n_, n_) * rho_;
    fv_.resize(n_);
    for (Eigen::Index j = 0; j < n_; ++j) {
      if (out_.n_iterations >= cfg_.max_iterations) {
        // Budget ran out mid-construction; move to the best vertex seen.
        Eigen::Index best = -1;
        for (Eigen::Index k = 0; k < j; ++k) {
          if (fv_(k) < (best < 0 ? fbase_ : fv_(best))) best = k;
        }
        if (best >= 0) {
          base_ += v_.row(best).transpose();
          fbase_ = fv_(best);
        }
        return false;
      }
      fv_(j) = step(base_ + v_.row(j).transpose());
    }
    rebase();
    return true;
  }

  bool invert(Eigen::MatrixXd& w) const {
    Eigen::FullPivLU<Eigen::MatrixXd> lu(v_);
    if (!lu.isInvertible()) return false;
    w = lu.inverse();
    return w.allFinite();
  }

  // Keeps the best vertex at the base of the simplex.
  void rebase() {
    Eigen::Index k = 0;
    const double fmin = fv_.minCoeff(&k);
    if (!(fmin < fbase_)) return;
    const Eigen::RowVectorXd shift = v_.row(k);
    base_ += shift.transpose();
    for (Eigen::Index j = 0; j < n_; ++j) {
      if (j != k) v_.row(j) -= shift;
    }
    v_.row(k) = -shift;
    std::swap(fbase_, fv_(k));
  }

  void replace_after_trust_step(const Eigen::MatrixXd& w, const Eigen::VectorXd& d, double ftrial) {
    // Replacing vertex j by base+d scales the simplex volume by |w_j . d|;
    // distant vertices are favoured so the simplex contracts around the base.
    const bool improved = ftrial < fbase_;
    double best_score = improved ? 0.0 : 1.0;
    Eigen::Index jdrop = -1;
    const double edge_max = kDelta * rho_;
    for (Eigen::Index j = 0; j < n_; ++j) {
      double score = std::abs(w.col(j).dot(d));
      const double dist = (v_.row(j).transpose() - d).norm();
      if (dist > edge_max) score *= (dist / edge_max) * (dist / edge_max);
      if (score > best_score) {
        best_score = score;
        jdrop = j;
      }
    }
    if (jdrop < 0) return;
    v_.row(jdrop) = d.transpose();
    fv_(jdrop) = ftrial;
    rebase();
  }

  OptimizationOutcome finish(bool converged) {
    out_.converged = converged;
    out_.best_energy = fbase_;
    out_.best_parameters.assign(base_.data(), base_.data() + base_.size());
    return std::move(out_);
  }

  const Objective& f_;
  const OptimizerConfig& cfg_;
  Eigen::Index n_;
  Eigen::VectorXd base_;
  double fbase_ = 0.0;
  Eigen::MatrixXd v_;  // rows: vertex offsets from base_
  Eigen::VectorXd fv_;
  double rho_ = 0.0;
  double rho_end_ = 0.0;
  OptimizationOutcome out_;
};

}  // namespace

OptimizationOutcome Cobyla::minimize(const Objective& objective, std::span<const double> x0,
                                     const OptimizerConfig& config) const {
  config.validate();
  for (double x : x0) {
    if (!std::isfinite(x)) throw ComputationError("starting point has a non-finite component");
  }
  return Run(objective, x0, config).solve();
}

OptimizationOutcome minimize(const Objective& objective, std::span<const double> x0,
                             const OptimizerConfig& config) {
  return Cobyla{}.minimize(objective, x0, config);
}

}  // namespace kadapt
