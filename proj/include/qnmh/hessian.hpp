#ifndef QNMH_HESSIAN_HPP
#define QNMH_HESSIAN_HPP

#include <Eigen/Dense>

#include <stdexcept>
#include <vector>

namespace qnmh {

/// One secant observation: s is the parameter difference, g the matching
/// gradient difference. The fitted matrix H approximates the inverse of the
/// curvature implied by the pairs, H * g ~= s.
struct SecantPair {
    Eigen::VectorXd s;
    Eigen::VectorXd g;
};

enum class HessianSource { Sr1, Ls, Bfgs, Fallback };

struct HessianEstimate {
    Eigen::MatrixXd matrix;
    bool corrected = false;
    HessianSource source = HessianSource::Fallback;
};

struct SingularSystemError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr double kSr1SkipTol = 1e-8;
constexpr double kZeroStepTol = 1e-12;

/// Symmetric rank-one update of an inverse-curvature estimate. The update is
/// skipped when the denominator is below kSr1SkipTol * ||s - Hg|| * ||g||.
Eigen::MatrixXd sr1_update(const Eigen::MatrixXd& h, const SecantPair& pair,
                           double skip_tol = kSr1SkipTol);

/// Limited-memory SR1: H0 = eps0 / ||grad_at_center|| * I, then sr1_update
/// folded over the pairs in the given order.
HessianEstimate sr1_estimate(const std::vector<SecantPair>& window,
                             const Eigen::VectorXd& grad_at_center, double eps0);

/// Regularized least-squares secant fit
///   H = (lambda I + Y Y^T)^-1 (lambda Lambda + Y S^T),
/// symmetrized. Throws SingularSystemError when lambda == 0 and Y is rank
/// deficient.
HessianEstimate ls_estimate(const std::vector<SecantPair>& window, double lambda,
                            const Eigen::MatrixXd& regularizer);

/// Damped BFGS on the direct curvature estimate B (Powell damping keeps B
/// positive definite); returns B^-1.
HessianEstimate bfgs_estimate(const std::vector<SecantPair>& window, double eps0,
                              const Eigen::VectorXd& grad_at_center);

/// Eigenvalue map lambda_i -> max(lambda_min, |lambda_i|). The corrected flag
/// is set iff any eigenvalue changed.
HessianEstimate spectral_correct(const Eigen::MatrixXd& h, double lambda_min,
                                 HessianSource source = HessianSource::Fallback);

/// Drops pairs with ||s|| below kZeroStepTol (duplicate states after
/// rejection).
std::vector<SecantPair> filter_pairs(std::vector<SecantPair> pairs);

} // namespace qnmh

#endif
