#ifndef QNMH_RNG_HPP
#define QNMH_RNG_HPP

#include <Eigen/Dense>

#include <cstdint>
#include <random>

namespace qnmh {

using Rng = std::mt19937_64;

// splitmix64 step, used to decorrelate seeds derived from (base, stream) pairs.
inline std::uint64_t mix_seed(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    return mix_seed(base ^ mix_seed(stream));
}

inline Eigen::VectorXd standard_normal_vector(Eigen::Index n, Rng& rng) {
    std::normal_distribution<double> normal;
    Eigen::VectorXd z(n);
    for (Eigen::Index i = 0; i < n; ++i) z[i] = normal(rng);
    return z;
}

// Standard normal CDF.
inline double normal_cdf(double x) {
    return 0.5 * std::erfc(-x * M_SQRT1_2);
}

} // namespace qnmh

#endif
