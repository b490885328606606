#include "qnmh/gaussian.hpp"

#include <cmath>
#include <stdexcept>

namespace qnmh {

GaussianProposal::GaussianProposal(Eigen::VectorXd mean, Eigen::MatrixXd covariance)
    : mean_(std::move(mean)), covariance_(std::move(covariance)) {
    if (covariance_.rows() != covariance_.cols() || covariance_.rows() != mean_.size()) {
        throw std::invalid_argument("GaussianProposal: dimension mismatch");
    }
    llt_.compute(covariance_);
    if (llt_.info() != Eigen::Success) {
        throw std::invalid_argument("GaussianProposal: covariance is not positive definite");
    }
    const Eigen::Index n = mean_.size();
    double log_det = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        log_det += 2.0 * std::log(llt_.matrixL()(i, i));
    }
    log_norm_ = -0.5 * (static_cast<double>(n) * std::log(2.0 * M_PI) + log_det);
}

Eigen::VectorXd GaussianProposal::sample(Rng& rng) const {
    Eigen::VectorXd z = standard_normal_vector(mean_.size(), rng);
    return mean_ + llt_.matrixL() * z;
}

double GaussianProposal::log_density(const Eigen::VectorXd& x) const {
    if (x.size() != mean_.size()) {
        throw std::invalid_argument("GaussianProposal::log_density: dimension mismatch");
    }
    Eigen::VectorXd centered = x - mean_;
    // L y = centered, quadratic form = ||y||^2.
    Eigen::VectorXd y = llt_.matrixL().solve(centered);
    return log_norm_ - 0.5 * y.squaredNorm();
}

GaussianProposal GaussianProposal::product(const GaussianProposal& a, const GaussianProposal& b) {
    if (a.mean_.size() != b.mean_.size()) {
        throw std::invalid_argument("GaussianProposal::product: dimension mismatch");
    }
    const Eigen::Index n = a.mean_.size();
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
    Eigen::MatrixXd prec_a = a.llt_.solve(id);
    Eigen::MatrixXd prec_b = b.llt_.solve(id);
    Eigen::MatrixXd prec = prec_a + prec_b;
    Eigen::LLT<Eigen::MatrixXd> fused(prec);
    Eigen::MatrixXd cov = fused.solve(id);
    cov = 0.5 * (cov + cov.transpose());
    Eigen::VectorXd mean = fused.solve(prec_a * a.mean_ + prec_b * b.mean_);
    return GaussianProposal(std::move(mean), std::move(cov));
}

} // namespace qnmh
