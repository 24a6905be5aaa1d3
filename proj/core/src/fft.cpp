#include "lrd/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

#include "lrd/errors.hpp"

namespace lrd::fft {
namespace {

// FFTW planning is not thread safe; execution on distinct buffers is. Plans
// are created with FFTW_UNALIGNED so new-array execution accepts any buffer.
class plan_cache {
 public:
  fftw_plan get(std::size_t n, int sign) {
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_pair(n, sign);
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second;
    std::vector<std::complex<double>> probe(n);
    auto* p = reinterpret_cast<fftw_complex*>(probe.data());
    fftw_plan plan =
        fftw_plan_dft_1d(static_cast<int>(n), p, p, sign,
                         FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (plan == nullptr) throw numerical_error("fftw plan creation failed");
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  std::mutex mu_;
  std::map<std::pair<std::size_t, int>, fftw_plan> plans_;
};

plan_cache& cache() {
  static plan_cache c;
  return c;
}

void execute(std::vector<std::complex<double>>& buf, int sign) {
  if (buf.empty()) return;
  fftw_plan plan = cache().get(buf.size(), sign);
  auto* p = reinterpret_cast<fftw_complex*>(buf.data());
  fftw_execute_dft(plan, p, p);
}

}  // namespace

void forward(std::vector<std::complex<double>>& buf) {
  execute(buf, FFTW_FORWARD);
}

void inverse(std::vector<std::complex<double>>& buf) {
  execute(buf, FFTW_BACKWARD);
  double inv = 1.0 / static_cast<double>(buf.size());
  for (auto& z : buf) z *= inv;
}

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

std::vector<double> circular_convolve(const std::vector<double>& a,
                                      const std::vector<double>& x,
                                      std::size_t len) {
  if (len < a.size() || len < x.size())
    throw parameter_error("circular_convolve: len shorter than an input");
  std::vector<std::complex<double>> fa(len), fx(len);
  for (std::size_t i = 0; i < a.size(); ++i) fa[i] = a[i];
  for (std::size_t i = 0; i < x.size(); ++i) fx[i] = x[i];
  forward(fa);
  forward(fx);
  for (std::size_t i = 0; i < len; ++i) fa[i] *= fx[i];
  inverse(fa);
  std::vector<double> out(len);
  for (std::size_t i = 0; i < len; ++i) out[i] = fa[i].real();
  return out;
}

std::vector<double> autocorrelation(const std::vector<double>& a) {
  if (a.empty()) return {};
  // len >= 2*size keeps circular wraparound out of lags 0..size-1.
  std::size_t len = next_pow2(2 * a.size());
  std::vector<std::complex<double>> fa(len);
  for (std::size_t i = 0; i < a.size(); ++i) fa[i] = a[i];
  forward(fa);
  for (auto& z : fa) z = z * std::conj(z);
  inverse(fa);
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = fa[i].real();
  return out;
}

}  // namespace lrd::fft
