// Shared basics: error types, scalar aliases, small utilities.
#pragma once

#include <complex>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>
#include <functional>

#include <Eigen/Dense>

namespace hydroalpha {

using Real = double;
using Complex = std::complex<double>;
using Vec = Eigen::VectorXd;
using VecC = Eigen::VectorXcd;
using Mat = Eigen::MatrixXd;
using MatC = Eigen::MatrixXcd;

inline constexpr Real kPi = 3.14159265358979323846264338327950288;

// Invalid arguments / violated preconditions.
class ParameterError : public std::invalid_argument {
  public:
    explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

// Numerical failures: non-finite values, exhausted analytic band, failed solves.
class NumericError : public std::runtime_error {
  public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// Worker cap for the per-column loops. HYDROALPHA_THREADS, default 1.
inline int max_threads() {
    static const int cached = [] {
        const char* env = std::getenv("HYDROALPHA_THREADS");
        if (!env) return 1;
        int v = std::atoi(env);
        if (v < 1) v = 1;
        int hw = static_cast<int>(std::thread::hardware_concurrency());
        if (hw > 0 && v > hw) v = hw;
        return v;
    }();
    return cached;
}

// Static partition over [0,n); bodies write disjoint slots, so the result is
// identical for any thread count. Reductions stay serial elsewhere.
inline void parallel_for(int n, const std::function<void(int)>& body) {
    const int nt = max_threads();
    if (nt <= 1 || n < 2 * nt) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(nt);
    for (int t = 0; t < nt; ++t) {
        pool.emplace_back([&, t] {
            for (int i = t; i < n; i += nt) body(i);
        });
    }
    for (auto& th : pool) th.join();
}

// FNV-1a over a string; used for config hashes in emitted file headers.
inline std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= static_cast<std::uint64_t>(c);
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace hydroalpha
