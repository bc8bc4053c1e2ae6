#include "hdglab/linalg.hpp"

#include <atomic>
#include <cstdio>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace hdglab {

std::string format_complex(Complex z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

LocalSingularityError::LocalSingularityError(Complex k_, Complex tau_, double h_, double ratio,
                                             const std::string &where)
    : std::runtime_error("local element matrix is singular (sigma_min/sigma_max = " +
                         std::to_string(ratio) + ") at k=" + format_complex(k_) +
                         ", tau=" + format_complex(tau_) + ", h=" + std::to_string(h_) +
                         (where.empty() ? std::string() : ", " + where)),
      k(k_), tau(tau_), h(h_), sigma_ratio(ratio) {}

SingularValueBounds extreme_singular_values(const CMatrix &a) {
  if (a.size() == 0) return {};
  Eigen::JacobiSVD<CMatrix> svd(a);
  const auto &s = svd.singularValues();
  return {s(s.size() - 1), s(0)};
}

void parallel_for(std::size_t n, unsigned threads,
                  const std::function<void(std::size_t)> &body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::jthread> pool;
  const unsigned count = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  for (unsigned t = 0; t < count; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < n;) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next = n;
        }
      }
    });
  pool.clear();
  if (error) std::rethrow_exception(error);
}

} // namespace hdglab
