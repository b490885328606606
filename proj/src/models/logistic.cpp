#include "qnmh/models/logistic.hpp"

#include <cmath>
#include <stdexcept>

#include "qnmh/rng.hpp"

namespace qnmh {

namespace {

constexpr double kLogTwoPi = 1.8378770664093453;

// log(1 + e^z) without overflow.
double log1p_exp(double z) {
    return z > 0.0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z));
}

} // namespace

LogisticData logit_simulate(int t_obs, const Eigen::VectorXd& beta_true, std::uint64_t seed) {
    const Eigen::Index p = beta_true.size();
    Rng rng(seed);
    std::normal_distribution<double> normal;
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    LogisticData data;
    data.x.resize(t_obs, p);
    data.y.resize(t_obs);
    for (int t = 0; t < t_obs; ++t) {
        data.x(t, 0) = 1.0;
        for (Eigen::Index j = 1; j < p; ++j) data.x(t, j) = normal(rng);
        const double z = data.x.row(t).dot(beta_true);
        const double prob = 1.0 / (1.0 + std::exp(-z));
        data.y[t] = uniform(rng) < prob ? 1.0 : 0.0;
    }
    return data;
}

std::vector<int> logit_subsample(int t_obs, int subsample, const Eigen::VectorXd& u_sub) {
    if (subsample > t_obs || u_sub.size() != subsample) {
        throw std::invalid_argument("logit_subsample: bad subsample size");
    }
    std::vector<int> subset;
    subset.reserve(subsample);
    int j = 1;  // 1-based position in the cumulative grid t / T
    for (int i = 1; i <= subsample; ++i) {
        const double threshold =
            (normal_cdf(u_sub[i - 1]) + static_cast<double>(i - 1)) / subsample;
        while (static_cast<double>(j) / t_obs < threshold && j < t_obs) ++j;
        subset.push_back(j - 1);
    }
    return subset;
}

TargetEvaluation logit_evaluate(const LogisticData& data, const Eigen::VectorXd& beta,
                                const std::vector<int>& subset, bool rescale,
                                bool with_hessian) {
    const Eigen::Index p = data.x.cols();
    if (beta.size() != p) {
        throw std::invalid_argument("logit_evaluate: beta dimension mismatch");
    }
    const double inflation =
        rescale ? static_cast<double>(data.x.rows()) / static_cast<double>(subset.size()) : 1.0;

    double loglik = 0.0;
    Eigen::VectorXd grad = Eigen::VectorXd::Zero(p);
    Eigen::MatrixXd hess = Eigen::MatrixXd::Zero(p, p);
    for (int t : subset) {
        const double z = data.x.row(t).dot(beta);
        const double prob = 1.0 / (1.0 + std::exp(-z));
        loglik += data.y[t] * z - log1p_exp(z);
        grad += (data.y[t] - prob) * data.x.row(t).transpose();
        if (with_hessian) {
            hess.selfadjointView<Eigen::Lower>().rankUpdate(data.x.row(t).transpose(),
                                                            -prob * (1.0 - prob));
        }
    }

    TargetEvaluation eval;
    eval.logtarget = -0.5 * beta.squaredNorm() - 0.5 * p * kLogTwoPi + inflation * loglik;
    eval.grad = -beta + inflation * grad;
    if (with_hessian) {
        hess = hess.selfadjointView<Eigen::Lower>();
        eval.hess = inflation * hess - Eigen::MatrixXd::Identity(p, p);
    }
    return eval;
}

LogisticModel::LogisticModel(LogisticData data, int subsample, bool rescale)
    : data_(std::move(data)), subsample_(subsample), rescale_(rescale) {
    if (subsample_ <= 0 || subsample_ > data_.x.rows()) {
        throw std::invalid_argument("LogisticModel: subsample must lie in [1, T]");
    }
}

TargetEvaluation LogisticModel::evaluate(const Eigen::VectorXd& theta_unc,
                                         const Eigen::VectorXd& u, bool with_hessian) const {
    if (u.size() != aux_dim()) {
        throw std::invalid_argument("LogisticModel::evaluate: wrong auxiliary length");
    }
    const auto subset = logit_subsample(static_cast<int>(data_.x.rows()), subsample_, u);
    return logit_evaluate(data_, theta_unc, subset, rescale_, with_hessian);
}

} // namespace qnmh
