#include "qnmh/proposals.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace qnmh {

Eigen::VectorXd cn_propose_aux(const Eigen::VectorXd& u, double sigma_u,
                               const Eigen::VectorXd& fresh) {
    if (sigma_u < 0.0 || sigma_u > 1.0) {
        throw std::invalid_argument("cn_propose_aux: sigma_u must lie in [0, 1]");
    }
    if (u.size() != fresh.size()) {
        throw std::invalid_argument("cn_propose_aux: dimension mismatch");
    }
    return std::sqrt(1.0 - sigma_u * sigma_u) * u + sigma_u * fresh;
}

GaussianProposal langevin_statistics(const Eigen::VectorXd& theta, const Eigen::VectorXd& grad,
                                     const Eigen::MatrixXd& h, double eps) {
    const double eps2 = eps * eps;
    Eigen::VectorXd mean = theta + 0.5 * eps2 * (h * grad);
    return GaussianProposal(std::move(mean), eps2 * h);
}

StepSizeState adapt_step_size(StepSizeState state, double alpha_prev) {
    const double gamma = std::pow(static_cast<double>(state.k), -state.eta);
    state.epsilon *= std::exp(gamma * (alpha_prev - state.alpha_star));
    state.k += 1;
    return state;
}

namespace {

QnProposal fallback_proposal(const MemoryWindow& window, const QnSettings& settings) {
    const Eigen::Index n = window.newest().theta.size();
    GaussianProposal proposal(window.newest().theta,
                              settings.delta * Eigen::MatrixXd::Identity(n, n));
    return {std::move(proposal), HessianSource::Fallback, false};
}

} // namespace

QnProposal qn_propose(const MemoryWindow& window, const QnSettings& settings,
                      const Eigen::MatrixXd& trust_covariance) {
    if (window.size() == 0) {
        throw std::invalid_argument("qn_propose: empty window");
    }

    // Unique states, sorted ascending by log-target.
    std::vector<const WindowEntry*> unique;
    for (const auto& entry : window.entries()) {
        const bool duplicate =
            std::any_of(unique.begin(), unique.end(), [&](const WindowEntry* seen) {
                return (seen->theta - entry.theta).norm() < kZeroStepTol;
            });
        if (!duplicate) unique.push_back(&entry);
    }
    std::stable_sort(unique.begin(), unique.end(),
                     [](const WindowEntry* a, const WindowEntry* b) {
                         return a->logtarget < b->logtarget;
                     });

    if (unique.size() < 2) {
        return fallback_proposal(window, settings);
    }

    std::vector<SecantPair> pairs;
    pairs.reserve(unique.size() - 1);
    for (std::size_t l = 1; l < unique.size(); ++l) {
        pairs.push_back({unique[l]->theta - unique[l - 1]->theta,
                         -(unique[l]->grad_aux - unique[l - 1]->grad_aux)});
    }
    pairs = filter_pairs(std::move(pairs));
    if (pairs.empty()) {
        return fallback_proposal(window, settings);
    }

    const WindowEntry& center = window.oldest();
    HessianEstimate estimate;
    try {
        switch (settings.method) {
            case QnMethod::Sr1:
                estimate = sr1_estimate(pairs, center.grad_main, settings.eps0);
                break;
            case QnMethod::Ls:
                estimate = ls_estimate(pairs, settings.lambda, trust_covariance);
                break;
            case QnMethod::Bfgs:
                estimate = bfgs_estimate(pairs, settings.eps0, center.grad_main);
                break;
        }
    } catch (const SingularSystemError&) {
        return fallback_proposal(window, settings);
    }

    HessianEstimate fixed = spectral_correct(estimate.matrix, settings.lambda_min, estimate.source);
    const double eps2 = settings.epsilon * settings.epsilon;
    Eigen::VectorXd mean = center.theta + 0.5 * eps2 * (fixed.matrix * center.grad_main);
    GaussianProposal proposal(std::move(mean), eps2 * fixed.matrix);
    if (settings.method == QnMethod::Sr1) {
        GaussianProposal trust(center.theta, trust_covariance);
        proposal = GaussianProposal::product(proposal, trust);
    }
    return {std::move(proposal), fixed.source, fixed.corrected};
}

double qn_log_density(const GaussianProposal& proposal, const Eigen::VectorXd& x) {
    return proposal.log_density(x);
}

} // namespace qnmh
