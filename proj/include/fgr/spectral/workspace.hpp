#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <vector>

namespace fgr {

namespace detail {
struct FftwFree {
  void operator()(void* p) const;
};
}  // namespace detail

/// fftw_malloc-backed array; all scratch passed to FFTW comes from here so
/// the new-array execute interface sees consistent alignment.
template <class T>
class AlignedBuffer {
 public:
  AlignedBuffer() = default;
  explicit AlignedBuffer(std::size_t n);

  std::size_t size() const { return n_; }
  T* data() { return static_cast<T*>(ptr_.get()); }
  const T* data() const { return static_cast<const T*>(ptr_.get()); }
  std::span<T> span() { return {data(), n_}; }

 private:
  std::unique_ptr<void, detail::FftwFree> ptr_;
  std::size_t n_ = 0;
};

/// Real-to-half-complex FFT pair of a fixed length m (unnormalized, FFTW sign
/// convention). Plans are built with FFTW_ESTIMATE so results are
/// reproducible bit-for-bit.
class RealFft {
 public:
  explicit RealFft(std::size_t m);
  ~RealFft();
  RealFft(const RealFft&) = delete;
  RealFft& operator=(const RealFft&) = delete;

  std::size_t size() const { return m_; }
  std::size_t spectrum_size() const { return m_ / 2 + 1; }

  /// out[j] = sum_n in[n] e^{-2 pi i j n / m}; input is preserved.
  void forward(const double* in, std::complex<double>* out) const;
  /// out[n] = sum_j in[j] e^{+2 pi i j n / m} (Hermitian extension); `in` is
  /// overwritten.
  void backward(std::complex<double>* in, double* out) const;

 private:
  std::size_t m_;
  void* forward_plan_ = nullptr;
  void* backward_plan_ = nullptr;
};

/// Per-run FFT plans and scratch buffers, cached per transform length.
/// Single owner: one workspace per concurrently running simulation.
class PaddedWorkspace {
 public:
  PaddedWorkspace() = default;
  PaddedWorkspace(const PaddedWorkspace&) = delete;
  PaddedWorkspace& operator=(const PaddedWorkspace&) = delete;

  const RealFft& fft(std::size_t m);

  /// Scratch slot `slot` holding at least m reals / m/2+1 complex values.
  /// Slots are independent of each other.
  std::span<double> real_scratch(std::size_t slot, std::size_t m);
  std::span<std::complex<double>> complex_scratch(std::size_t slot,
                                                  std::size_t m);

  /// Workspace private to the calling thread, used by the convenience
  /// overloads that take no explicit workspace.
  static PaddedWorkspace& thread_default();

 private:
  std::map<std::size_t, std::unique_ptr<RealFft>> plans_;
  std::vector<AlignedBuffer<double>> real_;
  std::vector<AlignedBuffer<std::complex<double>>> complex_;
};

/// True if n > 0 has no prime factor other than 2, 3, 5, 7.
bool is_7_smooth(std::size_t n);

/// Smallest 7-smooth integer strictly greater than `bound`.
std::size_t next_7_smooth_above(std::size_t bound);

}  // namespace fgr
