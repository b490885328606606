#ifndef QNMH_GAUSSIAN_HPP
#define QNMH_GAUSSIAN_HPP

#include <Eigen/Dense>

#include "qnmh/rng.hpp"

namespace qnmh {

/// Multivariate normal with cached Cholesky factor; supports sampling,
/// log-density evaluation and precision-weighted products.
class GaussianProposal {
  public:
    GaussianProposal(Eigen::VectorXd mean, Eigen::MatrixXd covariance);

    const Eigen::VectorXd& mean() const { return mean_; }
    const Eigen::MatrixXd& covariance() const { return covariance_; }

    Eigen::VectorXd sample(Rng& rng) const;
    double log_density(const Eigen::VectorXd& x) const;

    /// Normalized density of the product of two Gaussians: the fused
    /// precision is the sum of the precisions.
    static GaussianProposal product(const GaussianProposal& a, const GaussianProposal& b);

  private:
    Eigen::VectorXd mean_;
    Eigen::MatrixXd covariance_;
    Eigen::LLT<Eigen::MatrixXd> llt_;
    double log_norm_;
};

} // namespace qnmh

#endif
