#include "qnmh/models/random_effects.hpp"

#include <cmath>
#include <stdexcept>

#include "qnmh/rng.hpp"

namespace qnmh {

namespace {

constexpr double kLogTwoPi = 1.8378770664093453;

// log p(mu) + log p(sigma) with mu ~ N(0,1), sigma ~ C+(0,1).
double re_log_prior(double mu, double sigma) {
    return -0.5 * mu * mu - 0.5 * kLogTwoPi + std::log(2.0 / M_PI) -
           std::log1p(sigma * sigma);
}

Eigen::Vector2d re_log_prior_grad(double mu, double sigma) {
    const double s2 = sigma * sigma;
    return {-mu, -2.0 * s2 / (1.0 + s2)};
}

} // namespace

Eigen::VectorXd re_simulate(int t_obs, double mu, double sigma, std::uint64_t seed) {
    if (sigma <= 0.0) {
        throw std::invalid_argument("re_simulate: sigma must be positive");
    }
    Rng rng(seed);
    std::normal_distribution<double> normal;
    Eigen::VectorXd y(t_obs);
    for (int t = 0; t < t_obs; ++t) {
        const double x = mu + sigma * normal(rng);
        y[t] = x + normal(rng);
    }
    return y;
}

RandomEffectsModel::RandomEffectsModel(Eigen::VectorXd observations, int particles,
                                       GradMode grad_mode)
    : observations_(std::move(observations)), particles_(particles), grad_mode_(grad_mode) {
    if (particles_ <= 0) {
        throw std::invalid_argument("RandomEffectsModel: particles must be positive");
    }
}

TargetEvaluation RandomEffectsModel::evaluate(const Eigen::VectorXd& theta_unc,
                                              const Eigen::VectorXd& u, bool) const {
    if (u.size() != aux_dim()) {
        throw std::invalid_argument("RandomEffectsModel::evaluate: wrong auxiliary length");
    }
    const double mu = theta_unc[0];
    const double sigma = std::exp(theta_unc[1]);
    const int n = particles_;
    const Eigen::Index t_obs = observations_.size();

    double loglik = 0.0;
    double d_mu = 0.0;
    double d_sigma_tilde = 0.0;
    Eigen::VectorXd logw(n);
    for (Eigen::Index t = 0; t < t_obs; ++t) {
        const double y = observations_[t];
        const auto block = u.segment(t * n, n);
        double max_logw = -std::numeric_limits<double>::infinity();
        for (int i = 0; i < n; ++i) {
            const double x = mu + sigma * block[i];
            logw[i] = -0.5 * (y - x) * (y - x) - 0.5 * kLogTwoPi;
            max_logw = std::max(max_logw, logw[i]);
        }
        double sum = 0.0;
        for (int i = 0; i < n; ++i) sum += std::exp(logw[i] - max_logw);
        loglik += max_logw + std::log(sum) - std::log(static_cast<double>(n));
        for (int i = 0; i < n; ++i) {
            const double w = std::exp(logw[i] - max_logw) / sum;
            const double x = mu + sigma * block[i];
            if (grad_mode_ == GradMode::Pathwise) {
                d_mu += w * (y - x);
                d_sigma_tilde += w * (y - x) * (x - mu);
            } else {
                d_mu += w * (x - mu) / (sigma * sigma);
                d_sigma_tilde += w * ((x - mu) * (x - mu) / (sigma * sigma) - 1.0);
            }
        }
    }

    TargetEvaluation eval;
    eval.logtarget = re_log_prior(mu, sigma) + loglik;
    eval.grad = re_log_prior_grad(mu, sigma) + Eigen::Vector2d(d_mu, d_sigma_tilde);
    return eval;
}

double RandomEffectsModel::log_jacobian_ratio(const Eigen::VectorXd& candidate_unc,
                                              const Eigen::VectorXd& current_unc) const {
    return candidate_unc[1] - current_unc[1];
}

Eigen::VectorXd RandomEffectsModel::to_natural(const Eigen::VectorXd& theta_unc) const {
    return Eigen::Vector2d(theta_unc[0], std::exp(theta_unc[1]));
}

Eigen::VectorXd RandomEffectsModel::to_unconstrained(const Eigen::VectorXd& theta_nat) const {
    return Eigen::Vector2d(theta_nat[0], std::log(theta_nat[1]));
}

Eigen::VectorXd RandomEffectsModel::initial_theta() const {
    return to_unconstrained(Eigen::Vector2d(1.0, 0.2));
}

double RandomEffectsModel::log_prior(const Eigen::VectorXd& theta_unc) const {
    return re_log_prior(theta_unc[0], std::exp(theta_unc[1]));
}

RandomEffectsExactModel::RandomEffectsExactModel(Eigen::VectorXd observations)
    : observations_(std::move(observations)) {}

double RandomEffectsExactModel::exact_loglik(const Eigen::VectorXd& theta_unc) const {
    const double mu = theta_unc[0];
    const double sigma = std::exp(theta_unc[1]);
    const double v = sigma * sigma + 1.0;
    const Eigen::Index t_obs = observations_.size();
    const double ss = (observations_.array() - mu).square().sum();
    return -0.5 * static_cast<double>(t_obs) * (kLogTwoPi + std::log(v)) - 0.5 * ss / v;
}

TargetEvaluation RandomEffectsExactModel::evaluate(const Eigen::VectorXd& theta_unc,
                                                   const Eigen::VectorXd&, bool) const {
    const double mu = theta_unc[0];
    const double sigma = std::exp(theta_unc[1]);
    const double s2 = sigma * sigma;
    const double v = s2 + 1.0;
    const double t_obs = static_cast<double>(observations_.size());
    const double s1 = (observations_.array() - mu).sum();
    const double ss = (observations_.array() - mu).square().sum();

    TargetEvaluation eval;
    eval.logtarget = log_prior(theta_unc) + exact_loglik(theta_unc);
    eval.grad = re_log_prior_grad(mu, sigma) +
                Eigen::Vector2d(s1 / v, s2 * (-t_obs / v + ss / (v * v)));

    Eigen::Matrix2d hess;
    hess(0, 0) = -t_obs / v - 1.0;
    hess(0, 1) = hess(1, 0) = -2.0 * s2 * s1 / (v * v);
    hess(1, 1) = 2.0 * s2 * (-t_obs / v + ss / (v * v)) +
                 2.0 * s2 * s2 * (t_obs / (v * v) - 2.0 * ss / (v * v * v)) -
                 4.0 * s2 / (v * v);
    eval.hess = hess;
    return eval;
}

double RandomEffectsExactModel::log_jacobian_ratio(const Eigen::VectorXd& candidate_unc,
                                                   const Eigen::VectorXd& current_unc) const {
    return candidate_unc[1] - current_unc[1];
}

Eigen::VectorXd RandomEffectsExactModel::to_natural(const Eigen::VectorXd& theta_unc) const {
    return Eigen::Vector2d(theta_unc[0], std::exp(theta_unc[1]));
}

Eigen::VectorXd RandomEffectsExactModel::to_unconstrained(const Eigen::VectorXd& theta_nat) const {
    return Eigen::Vector2d(theta_nat[0], std::log(theta_nat[1]));
}

Eigen::VectorXd RandomEffectsExactModel::initial_theta() const {
    return to_unconstrained(Eigen::Vector2d(1.0, 0.2));
}

double RandomEffectsExactModel::log_prior(const Eigen::VectorXd& theta_unc) const {
    return re_log_prior(theta_unc[0], std::exp(theta_unc[1]));
}

} // namespace qnmh
