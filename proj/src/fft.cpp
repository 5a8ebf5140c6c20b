#include "densimat/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <mutex>
#include <stdexcept>

namespace densimat::fft {

namespace {

struct PlanKey {
  std::vector<int> dims;
  int howmany;
  int sign;
  bool operator<(const PlanKey& o) const {
    if (dims != o.dims) return dims < o.dims;
    if (howmany != o.howmany) return howmany < o.howmany;
    return sign < o.sign;
  }
};

std::mutex g_plan_mutex;
std::map<PlanKey, fftw_plan>& plan_cache() {
  static std::map<PlanKey, fftw_plan> cache;
  return cache;
}

fftw_plan get_plan(const std::vector<int>& dims, int howmany, int sign, fftw_complex* buf) {
  std::lock_guard<std::mutex> lock(g_plan_mutex);
  PlanKey key{dims, howmany, sign};
  auto& cache = plan_cache();
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  long block = 1;
  for (int d : dims) block *= d;
  // FFTW_UNALIGNED so the cached plan can be re-executed on any array.
  fftw_plan p = fftw_plan_many_dft(
      static_cast<int>(dims.size()), dims.data(), howmany, buf, nullptr, 1,
      static_cast<int>(block), buf, nullptr, 1, static_cast<int>(block),
      sign == kForward ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (!p) throw std::runtime_error("fftw plan creation failed");
  cache.emplace(key, p);
  return p;
}

}  // namespace

void transform(std::complex<double>* data, const std::vector<int>& dims, int howmany, int sign) {
  auto* buf = reinterpret_cast<fftw_complex*>(data);
  fftw_plan p = get_plan(dims, howmany, sign, buf);
  fftw_execute_dft(p, buf, buf);
}

void transform_2d_mixed(std::complex<double>* data, int n0, int n1, int sign0, int sign1) {
  if (sign0 == sign1) {
    transform_2d(data, n0, n1, 1, sign0);
    return;
  }
  // rows (axis 1): n0 contiguous transforms of length n1
  transform(data, {n1}, n0, sign1);
  // columns (axis 0): transpose, transform, transpose back
  std::vector<std::complex<double>> tmp(static_cast<size_t>(n0) * n1);
  for (int i = 0; i < n0; ++i)
    for (int j = 0; j < n1; ++j) tmp[static_cast<size_t>(j) * n0 + i] = data[static_cast<size_t>(i) * n1 + j];
  transform(tmp.data(), {n0}, n1, sign0);
  for (int i = 0; i < n0; ++i)
    for (int j = 0; j < n1; ++j) data[static_cast<size_t>(i) * n1 + j] = tmp[static_cast<size_t>(j) * n0 + i];
}

}  // namespace densimat::fft
