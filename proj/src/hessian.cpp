#include "qnmh/hessian.hpp"

#include <algorithm>
#include <cmath>

namespace qnmh {

namespace {

void check_pair(const Eigen::MatrixXd& h, const SecantPair& pair) {
    if (pair.s.size() != pair.g.size() || pair.s.size() != h.rows() || h.rows() != h.cols()) {
        throw std::invalid_argument("secant pair dimension mismatch");
    }
}

Eigen::MatrixXd scaled_identity(Eigen::Index n, double scale) {
    return scale * Eigen::MatrixXd::Identity(n, n);
}

} // namespace

Eigen::MatrixXd sr1_update(const Eigen::MatrixXd& h, const SecantPair& pair, double skip_tol) {
    check_pair(h, pair);
    Eigen::VectorXd z = pair.s - h * pair.g;
    const double denom = z.dot(pair.g);
    const double z_norm = z.norm();
    if (z_norm == 0.0 || std::abs(denom) < skip_tol * z_norm * pair.g.norm()) {
        return h;
    }
    return h + (z * z.transpose()) / denom;
}

HessianEstimate sr1_estimate(const std::vector<SecantPair>& window,
                             const Eigen::VectorXd& grad_at_center, double eps0) {
    if (window.empty()) {
        throw std::invalid_argument("sr1_estimate: empty window");
    }
    const Eigen::Index n = window.front().s.size();
    const double grad_norm = grad_at_center.norm();
    Eigen::MatrixXd h = grad_norm > 0.0 ? scaled_identity(n, eps0 / grad_norm)
                                        : scaled_identity(n, eps0);
    for (const auto& pair : window) {
        h = sr1_update(h, pair);
    }
    return {std::move(h), false, HessianSource::Sr1};
}

HessianEstimate ls_estimate(const std::vector<SecantPair>& window, double lambda,
                            const Eigen::MatrixXd& regularizer) {
    if (window.empty()) {
        throw std::invalid_argument("ls_estimate: empty window");
    }
    const Eigen::Index n = window.front().s.size();
    const Eigen::Index m = static_cast<Eigen::Index>(window.size());
    Eigen::MatrixXd y(n, m);
    Eigen::MatrixXd s(n, m);
    for (Eigen::Index j = 0; j < m; ++j) {
        const auto& pair = window[static_cast<std::size_t>(j)];
        if (pair.s.size() != n || pair.g.size() != n) {
            throw std::invalid_argument("ls_estimate: pair dimension mismatch");
        }
        y.col(j) = pair.g;
        s.col(j) = pair.s;
    }
    Eigen::MatrixXd gram = y * y.transpose();
    if (lambda == 0.0) {
        Eigen::FullPivLU<Eigen::MatrixXd> lu(gram);
        if (!lu.isInvertible()) {
            throw SingularSystemError("ls_estimate: rank-deficient secant system with lambda = 0");
        }
    }
    gram.diagonal().array() += lambda;
    Eigen::MatrixXd rhs = lambda * regularizer + y * s.transpose();
    Eigen::MatrixXd h = gram.ldlt().solve(rhs);
    h = 0.5 * (h + h.transpose());
    return {std::move(h), false, HessianSource::Ls};
}

HessianEstimate bfgs_estimate(const std::vector<SecantPair>& window, double eps0,
                              const Eigen::VectorXd& grad_at_center) {
    if (window.empty()) {
        throw std::invalid_argument("bfgs_estimate: empty window");
    }
    const Eigen::Index n = window.front().s.size();
    const double grad_norm = grad_at_center.norm();
    Eigen::MatrixXd b = grad_norm > 0.0 ? scaled_identity(n, grad_norm / eps0)
                                        : scaled_identity(n, 1.0 / eps0);
    for (const auto& pair : window) {
        check_pair(b, pair);
        Eigen::VectorXd bs = b * pair.s;
        const double s_bs = pair.s.dot(bs);
        const double s_g = pair.s.dot(pair.g);
        double tau = 1.0;
        if (s_g < 0.2 * s_bs) {
            tau = 0.8 * s_bs / (s_bs - s_g);
        }
        Eigen::VectorXd r = tau * pair.g + (1.0 - tau) * bs;
        const double s_r = pair.s.dot(r);
        if (s_bs <= 0.0 || s_r <= 0.0) {
            continue;
        }
        b += -(bs * bs.transpose()) / s_bs + (r * r.transpose()) / s_r;
    }
    Eigen::MatrixXd h = b.llt().solve(Eigen::MatrixXd::Identity(n, n));
    h = 0.5 * (h + h.transpose());
    return {std::move(h), false, HessianSource::Bfgs};
}

HessianEstimate spectral_correct(const Eigen::MatrixXd& h, double lambda_min,
                                 HessianSource source) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(h);
    Eigen::VectorXd values = eig.eigenvalues();
    bool corrected = false;
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        const double fixed = std::max(lambda_min, std::abs(values[i]));
        if (fixed != values[i]) corrected = true;
        values[i] = fixed;
    }
    Eigen::MatrixXd out =
        eig.eigenvectors() * values.asDiagonal() * eig.eigenvectors().transpose();
    out = 0.5 * (out + out.transpose());
    return {std::move(out), corrected, source};
}

std::vector<SecantPair> filter_pairs(std::vector<SecantPair> pairs) {
    pairs.erase(std::remove_if(pairs.begin(), pairs.end(),
                               [](const SecantPair& p) { return p.s.norm() < kZeroStepTol; }),
                pairs.end());
    return pairs;
}

} // namespace qnmh
