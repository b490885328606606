#ifndef QNMH_MODELS_LOGISTIC_HPP
#define QNMH_MODELS_LOGISTIC_HPP

#include <cstdint>
#include <vector>

#include "qnmh/model.hpp"

namespace qnmh {

struct LogisticData {
    Eigen::VectorXd y;  // labels in {0, 1}
    Eigen::MatrixXd x;  // T x p design matrix, first column is the intercept
};

/// Synthetic design: intercept column plus standard-normal covariates,
/// labels drawn from the logistic likelihood at beta_true.
LogisticData logit_simulate(int t_obs, const Eigen::VectorXd& beta_true, std::uint64_t seed);

/// Correlated stratified sub-sampling: each normal in u_sub is mapped to a
/// uniform through the standard-normal CDF, then thresholds (u_i + i - 1) / N
/// walk the cumulative grid t / T. Returns N 0-based indices; the tail index
/// T - 1 may repeat.
std::vector<int> logit_subsample(int t_obs, int subsample, const Eigen::VectorXd& u_sub);

/// Bernoulli log-target, gradient and Hessian over the index set (kept with
/// multiplicity), each multiplied by T / |D| when rescale is set. Prior is
/// beta_l ~ N(0, 1).
TargetEvaluation logit_evaluate(const LogisticData& data, const Eigen::VectorXd& beta,
                                const std::vector<int>& subset, bool rescale,
                                bool with_hessian = true);

/// Sub-sampled logistic regression target. subsample == T reduces to the
/// full-data posterior (the stratified walk then selects every index once).
class LogisticModel final : public Model {
  public:
    LogisticModel(LogisticData data, int subsample, bool rescale = true);

    std::string name() const override { return "logistic"; }
    Eigen::Index param_dim() const override { return data_.x.cols(); }
    Eigen::Index aux_dim() const override { return subsample_; }

    using Model::evaluate;
    TargetEvaluation evaluate(const Eigen::VectorXd& theta_unc, const Eigen::VectorXd& u,
                              bool with_hessian) const override;
    double log_jacobian_ratio(const Eigen::VectorXd&, const Eigen::VectorXd&) const override {
        return 0.0;
    }
    Eigen::VectorXd to_natural(const Eigen::VectorXd& theta_unc) const override {
        return theta_unc;
    }
    Eigen::VectorXd to_unconstrained(const Eigen::VectorXd& theta_nat) const override {
        return theta_nat;
    }
    Eigen::VectorXd initial_theta() const override {
        return Eigen::VectorXd::Zero(param_dim());
    }
    Eigen::MatrixXd initial_lambda() const override {
        return 0.01 * Eigen::MatrixXd::Identity(param_dim(), param_dim());
    }
    bool has_hessian() const override { return true; }

    const LogisticData& data() const { return data_; }
    int subsample() const { return subsample_; }

  private:
    LogisticData data_;
    int subsample_;
    bool rescale_;
};

} // namespace qnmh

#endif
