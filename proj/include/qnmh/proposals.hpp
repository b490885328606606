#ifndef QNMH_PROPOSALS_HPP
#define QNMH_PROPOSALS_HPP

#include <Eigen/Dense>

#include <deque>
#include <optional>

#include "qnmh/gaussian.hpp"
#include "qnmh/hessian.hpp"

namespace qnmh {

/// AR(1) auxiliary-variable move u' = sqrt(1 - sigma_u^2) u + sigma_u * fresh.
/// sigma_u = 1 gives the independent proposal, sigma_u = 0 keeps u fixed.
Eigen::VectorXd cn_propose_aux(const Eigen::VectorXd& u, double sigma_u,
                               const Eigen::VectorXd& fresh);

/// Euler-discretized Langevin statistics: mean = theta + eps^2/2 H G,
/// covariance = eps^2 H. H must be positive definite.
GaussianProposal langevin_statistics(const Eigen::VectorXd& theta, const Eigen::VectorXd& grad,
                                     const Eigen::MatrixXd& h, double eps);

struct StepSizeState {
    double epsilon;
    long k = 1;
    double alpha_star;
    double eta;
};

/// Robbins-Monro update eps_k = eps_{k-1} * exp(k^-eta (alpha - alpha_star)).
StepSizeState adapt_step_size(StepSizeState state, double alpha_prev);

enum class QnMethod { Sr1, Ls, Bfgs };

/// One remembered chain state: grad_main drives the proposal drift, grad_aux
/// (estimated from the second auxiliary stream) feeds the secant pairs.
struct WindowEntry {
    Eigen::VectorXd theta;
    double logtarget;
    Eigen::VectorXd grad_main;
    Eigen::VectorXd grad_aux;
};

/// Sliding buffer of the last M post-decision states, oldest first.
class MemoryWindow {
  public:
    explicit MemoryWindow(std::size_t capacity) : capacity_(capacity) {}

    void push(WindowEntry entry) {
        if (entries_.size() == capacity_) entries_.pop_front();
        entries_.push_back(std::move(entry));
    }

    std::size_t size() const { return entries_.size(); }
    std::size_t capacity() const { return capacity_; }
    bool full() const { return entries_.size() == capacity_; }
    const WindowEntry& oldest() const { return entries_.front(); }
    const WindowEntry& newest() const { return entries_.back(); }
    const std::deque<WindowEntry>& entries() const { return entries_; }

  private:
    std::size_t capacity_;
    std::deque<WindowEntry> entries_;
};

struct QnSettings {
    QnMethod method = QnMethod::Ls;
    double epsilon = 0.1;
    double delta = 0.1;
    double lambda = 0.1;
    double lambda_min = 1e-6;
    double eps0 = 0.01;
};

struct QnProposal {
    GaussianProposal proposal;
    HessianSource source;
    bool corrected;
};

/// Quasi-Newton proposal built from the memory window. The candidate
/// covariance approximates the negative inverse Hessian of the log-target:
/// secant pairs are assembled with negated gradient differences so the fit is
/// positively oriented (this also gives damped BFGS the positive curvature it
/// expects and points the LS regularizer toward +Lambda). Falls back to a
/// random walk N(theta_newest, delta I) when fewer than two unique states are
/// available or the estimator fails.
QnProposal qn_propose(const MemoryWindow& window, const QnSettings& settings,
                      const Eigen::MatrixXd& trust_covariance);

/// Multivariate normal log-density of the proposal at x.
double qn_log_density(const GaussianProposal& proposal, const Eigen::VectorXd& x);

} // namespace qnmh

#endif
