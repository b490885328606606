#ifndef QNMH_MODELS_RANDOM_EFFECTS_HPP
#define QNMH_MODELS_RANDOM_EFFECTS_HPP

#include <cstdint>

#include "qnmh/model.hpp"

namespace qnmh {

/// Observations from the random effects model x_t ~ N(mu, sigma^2),
/// y_t | x_t ~ N(x_t, 1), i.e. y_t ~ N(mu, sigma^2 + 1).
Eigen::VectorXd re_simulate(int t_obs, double mu, double sigma, std::uint64_t seed);

/// Correlated importance sampling estimator for the random effects model.
/// Parameters are (mu, log sigma); u holds N * T standard normals, one block
/// of N per observation. Priors: mu ~ N(0,1), sigma ~ half-Cauchy(0,1).
class RandomEffectsModel final : public Model {
  public:
    RandomEffectsModel(Eigen::VectorXd observations, int particles,
                       GradMode grad_mode = GradMode::Pathwise);

    std::string name() const override { return "random_effects"; }
    Eigen::Index param_dim() const override { return 2; }
    Eigen::Index aux_dim() const override {
        return static_cast<Eigen::Index>(particles_) * observations_.size();
    }

    using Model::evaluate;
    TargetEvaluation evaluate(const Eigen::VectorXd& theta_unc, const Eigen::VectorXd& u,
                              bool with_hessian) const override;
    double log_jacobian_ratio(const Eigen::VectorXd& candidate_unc,
                              const Eigen::VectorXd& current_unc) const override;
    Eigen::VectorXd to_natural(const Eigen::VectorXd& theta_unc) const override;
    Eigen::VectorXd to_unconstrained(const Eigen::VectorXd& theta_nat) const override;
    Eigen::VectorXd initial_theta() const override;

    double log_prior(const Eigen::VectorXd& theta_unc) const;
    const Eigen::VectorXd& observations() const { return observations_; }
    int particles() const { return particles_; }

  private:
    Eigen::VectorXd observations_;
    int particles_;
    GradMode grad_mode_;
};

/// Exact-likelihood sibling of RandomEffectsModel using the closed-form
/// marginal y_t ~ N(mu, sigma^2 + 1); aux_dim() == 0. Provides the exact
/// Hessian, so it also serves as the oracle target for validity checks.
class RandomEffectsExactModel final : public Model {
  public:
    explicit RandomEffectsExactModel(Eigen::VectorXd observations);

    std::string name() const override { return "random_effects_exact"; }
    Eigen::Index param_dim() const override { return 2; }
    Eigen::Index aux_dim() const override { return 0; }

    using Model::evaluate;
    TargetEvaluation evaluate(const Eigen::VectorXd& theta_unc, const Eigen::VectorXd& u,
                              bool with_hessian) const override;
    double log_jacobian_ratio(const Eigen::VectorXd& candidate_unc,
                              const Eigen::VectorXd& current_unc) const override;
    Eigen::VectorXd to_natural(const Eigen::VectorXd& theta_unc) const override;
    Eigen::VectorXd to_unconstrained(const Eigen::VectorXd& theta_nat) const override;
    Eigen::VectorXd initial_theta() const override;
    bool has_hessian() const override { return true; }

    double log_prior(const Eigen::VectorXd& theta_unc) const;
    double exact_loglik(const Eigen::VectorXd& theta_unc) const;

  private:
    Eigen::VectorXd observations_;
};

} // namespace qnmh

#endif
