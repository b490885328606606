#ifndef QNMH_MODEL_HPP
#define QNMH_MODEL_HPP

#include <Eigen/Dense>

#include <optional>
#include <string>

namespace qnmh {

/// Log-target estimate at one (theta, u) pair. logtarget is log prior plus
/// estimated log-likelihood; grad is its exact derivative in unconstrained
/// coordinates at fixed u; hess (when available) is the exact Hessian of the
/// log-target.
struct TargetEvaluation {
    double logtarget = 0.0;
    Eigen::VectorXd grad;
    std::optional<Eigen::MatrixXd> hess;
};

/// How gradient estimates are formed: the exact derivative of the
/// deterministic estimator (pathwise), or a self-normalized Fisher-identity
/// score with fixed particle values.
enum class GradMode { Pathwise, Fisher };

/// A target model with a correlated noisy estimator. Evaluations must be
/// deterministic functions of (theta, u).
class Model {
  public:
    virtual ~Model() = default;

    virtual std::string name() const = 0;
    virtual Eigen::Index param_dim() const = 0;
    virtual Eigen::Index aux_dim() const = 0;

    virtual TargetEvaluation evaluate(const Eigen::VectorXd& theta_unc, const Eigen::VectorXd& u,
                                      bool with_hessian) const = 0;

    TargetEvaluation evaluate(const Eigen::VectorXd& theta_unc, const Eigen::VectorXd& u) const {
        return evaluate(theta_unc, u, false);
    }

    /// log of the reparameterization Jacobian ratio |J(candidate)| / |J(current)|.
    virtual double log_jacobian_ratio(const Eigen::VectorXd& candidate_unc,
                                      const Eigen::VectorXd& current_unc) const = 0;

    virtual Eigen::VectorXd to_natural(const Eigen::VectorXd& theta_unc) const = 0;
    virtual Eigen::VectorXd to_unconstrained(const Eigen::VectorXd& theta_nat) const = 0;

    virtual Eigen::VectorXd initial_theta() const = 0;

    /// Fixed proposal scaling used during burn-in (trust region, LS
    /// regularizer and pmMH0/1 covariance).
    virtual Eigen::MatrixXd initial_lambda() const {
        return 0.1 * Eigen::MatrixXd::Identity(param_dim(), param_dim());
    }

    virtual bool has_hessian() const { return false; }
};

} // namespace qnmh

#endif
