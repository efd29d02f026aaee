#include "fgr/spectral/workspace.hpp"

#include <fftw3.h>

#include <mutex>
#include <new>

namespace fgr {

namespace detail {
void FftwFree::operator()(void* p) const { fftw_free(p); }
}  // namespace detail

namespace {
// The FFTW planner is not re-entrant.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

template <class T>
AlignedBuffer<T>::AlignedBuffer(std::size_t n) : n_(n) {
  void* p = fftw_malloc(sizeof(T) * (n == 0 ? 1 : n));
  if (!p) throw std::bad_alloc();
  ptr_.reset(p);
}

template class AlignedBuffer<double>;
template class AlignedBuffer<std::complex<double>>;

RealFft::RealFft(std::size_t m) : m_(m) {
  AlignedBuffer<double> real(m);
  AlignedBuffer<std::complex<double>> spec(m / 2 + 1);
  auto* c = reinterpret_cast<fftw_complex*>(spec.data());
  std::lock_guard lock(planner_mutex());
  forward_plan_ = fftw_plan_dft_r2c_1d(static_cast<int>(m), real.data(), c,
                                       FFTW_ESTIMATE | FFTW_PRESERVE_INPUT);
  backward_plan_ = fftw_plan_dft_c2r_1d(static_cast<int>(m), c, real.data(),
                                        FFTW_ESTIMATE | FFTW_DESTROY_INPUT);
  if (!forward_plan_ || !backward_plan_) throw std::bad_alloc();
}

RealFft::~RealFft() {
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(static_cast<fftw_plan>(forward_plan_));
  fftw_destroy_plan(static_cast<fftw_plan>(backward_plan_));
}

void RealFft::forward(const double* in, std::complex<double>* out) const {
  fftw_execute_dft_r2c(static_cast<fftw_plan>(forward_plan_),
                       const_cast<double*>(in),
                       reinterpret_cast<fftw_complex*>(out));
}

void RealFft::backward(std::complex<double>* in, double* out) const {
  fftw_execute_dft_c2r(static_cast<fftw_plan>(backward_plan_),
                       reinterpret_cast<fftw_complex*>(in), out);
}

const RealFft& PaddedWorkspace::fft(std::size_t m) {
  auto it = plans_.find(m);
  if (it == plans_.end()) {
    it = plans_.emplace(m, std::make_unique<RealFft>(m)).first;
  }
  return *it->second;
}

std::span<double> PaddedWorkspace::real_scratch(std::size_t slot, std::size_t m) {
  if (real_.size() <= slot) real_.resize(slot + 1);
  if (real_[slot].size() < m) real_[slot] = AlignedBuffer<double>(m);
  return {real_[slot].data(), m};
}

std::span<std::complex<double>> PaddedWorkspace::complex_scratch(std::size_t slot,
                                                                 std::size_t m) {
  const std::size_t n = m / 2 + 1;
  if (complex_.size() <= slot) complex_.resize(slot + 1);
  if (complex_[slot].size() < n) {
    complex_[slot] = AlignedBuffer<std::complex<double>>(n);
  }
  return {complex_[slot].data(), n};
}

PaddedWorkspace& PaddedWorkspace::thread_default() {
  thread_local PaddedWorkspace ws;
  return ws;
}

bool is_7_smooth(std::size_t n) {
  if (n == 0) return false;
  for (std::size_t p : {2u, 3u, 5u, 7u}) {
    while (n % p == 0) n /= p;
  }
  return n == 1;
}

std::size_t next_7_smooth_above(std::size_t bound) {
  std::size_t m = bound + 1;
  while (!is_7_smooth(m)) ++m;
  return m;
}

}  // namespace fgr
