#pragma once

// X-ray plots: the curves Re f = 0 and Im f = 0 of a complex function over a
// rectangle, found as sign changes between neighbouring pixel centres.

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

#include "auxr/auxiliary.hpp"
#include "auxr/core.hpp"
#include "auxr/hermite.hpp"

namespace auxr {

struct GridSpec {
  double x_min = -6.0, x_max = 6.0;
  double y_min = -6.0, y_max = 6.0;
  long nx = 512, ny = 512;

  static GridSpec square(double half, long n) { return {-half, half, -half, half, n, n}; }

  void validate() const {
    if (!(x_min < x_max) || !(y_min < y_max)) throw DomainError("GridSpec: empty rectangle");
    if (nx < 2 || ny < 2) throw DomainError("GridSpec: need at least 2x2 pixels");
  }

  double dx() const { return (x_max - x_min) / static_cast<double>(nx); }
  double dy() const { return (y_max - y_min) / static_cast<double>(ny); }

  /// Centre of pixel (j, k); k = 0 is the row at y_min.
  Complex center(long j, long k) const {
    return {x_min + (static_cast<double>(j) + 0.5) * dx(),
            y_min + (static_cast<double>(k) + 0.5) * dy()};
  }
};

/// A function value with a flag for reduced precision.
struct Sample {
  Complex value;
  bool degraded = false;
};

/// Row-major samples, index k * nx + j.
struct GridValues {
  GridSpec grid;
  std::vector<Complex> values;
  std::vector<std::uint8_t> degraded;

  Complex at(long j, long k) const { return values[static_cast<std::size_t>(k * grid.nx + j)]; }
  bool is_degraded(long j, long k) const {
    return degraded[static_cast<std::size_t>(k * grid.nx + j)] != 0;
  }
  long degraded_count() const {
    return static_cast<long>(std::count(degraded.begin(), degraded.end(), std::uint8_t{1}));
  }
};

namespace detail {

template <class F>
Sample call_sample(F& f, Complex z) {
  using R = std::invoke_result_t<F&, Complex>;
  Sample s;
  try {
    if constexpr (std::is_convertible_v<R, Complex>) {
      s.value = f(z);
    } else {
      const auto r = f(z);
      s.value = r.value;
      s.degraded = r.degraded;
    }
  } catch (const std::exception&) {
    s.value = Complex{std::numeric_limits<double>::quiet_NaN(), 0.0};
    s.degraded = true;
  }
  if (!is_finite(s.value)) s.degraded = true;
  return s;
}

}  // namespace detail

/// Evaluates f at every pixel centre. f returns a Complex or something with
/// .value and .degraded; non-finite values and exceptions mark the pixel
/// degraded. Rows are handed out to `threads` workers (0: hardware count);
/// each pixel is written by exactly one worker, so the result does not depend
/// on scheduling.
template <class F>
GridValues eval_grid(F&& f, const GridSpec& grid, unsigned threads = 0) {
  grid.validate();
  GridValues out;
  out.grid = grid;
  const std::size_t n = static_cast<std::size_t>(grid.nx * grid.ny);
  out.values.assign(n, Complex{});
  out.degraded.assign(n, 0);

  std::atomic<long> next_row{0};
  auto worker = [&] {
    for (long k = next_row++; k < grid.ny; k = next_row++) {
      for (long j = 0; j < grid.nx; ++j) {
        const Sample s = detail::call_sample(f, grid.center(j, k));
        const std::size_t idx = static_cast<std::size_t>(k * grid.nx + j);
        out.values[idx] = s.value;
        out.degraded[idx] = s.degraded ? 1 : 0;
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<long>(threads, grid.ny));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return out;
}

enum class PixelClass : std::uint8_t { None, ReZero, ImZero, Both, Degraded };

inline const char* to_string(PixelClass c) {
  switch (c) {
    case PixelClass::None: return "none";
    case PixelClass::ReZero: return "re_zero";
    case PixelClass::ImZero: return "im_zero";
    case PixelClass::Both: return "both";
    case PixelClass::Degraded: return "degraded";
  }
  return "?";
}

struct XRayImage {
  GridSpec grid;
  std::vector<PixelClass> classes;  // row-major like GridValues

  PixelClass at(long j, long k) const { return classes[static_cast<std::size_t>(k * grid.nx + j)]; }
  long count(PixelClass c) const {
    return static_cast<long>(std::count(classes.begin(), classes.end(), c));
  }
};

namespace detail {
// 0.0 (and -0.0) counts as positive.
inline bool positive(double x) { return x >= 0.0; }
}  // namespace detail

/// A pixel is re_zero when Re f changes sign against its right or upper
/// neighbour, im_zero likewise for Im f, both when both hold. Degraded pixels
/// keep their own label and are skipped as neighbours.
inline XRayImage detect_zero_curves(const GridValues& v) {
  const GridSpec& g = v.grid;
  XRayImage img;
  img.grid = g;
  img.classes.assign(static_cast<std::size_t>(g.nx * g.ny), PixelClass::None);
  for (long k = 0; k < g.ny; ++k) {
    for (long j = 0; j < g.nx; ++j) {
      PixelClass& out = img.classes[static_cast<std::size_t>(k * g.nx + j)];
      if (v.is_degraded(j, k)) {
        out = PixelClass::Degraded;
        continue;
      }
      const Complex c = v.at(j, k);
      bool re = false, im = false;
      auto compare = [&](long jj, long kk) {
        if (jj >= g.nx || kk >= g.ny || v.is_degraded(jj, kk)) return;
        const Complex d = v.at(jj, kk);
        re = re || detail::positive(c.real()) != detail::positive(d.real());
        im = im || detail::positive(c.imag()) != detail::positive(d.imag());
      };
      compare(j + 1, k);
      compare(j, k + 1);
      out = re && im ? PixelClass::Both
            : re     ? PixelClass::ReZero
            : im     ? PixelClass::ImZero
                     : PixelClass::None;
    }
  }
  return img;
}

inline std::array<std::uint8_t, 3> palette(PixelClass c) {
  switch (c) {
    case PixelClass::None: return {255, 255, 255};
    case PixelClass::ReZero: return {0, 0, 0};
    case PixelClass::ImZero: return {128, 128, 128};
    case PixelClass::Both: return {255, 0, 0};
    case PixelClass::Degraded: return {255, 255, 0};
  }
  return {255, 255, 255};
}

/// Binary P6 pixmap; the first image row is y_max, so the picture has the
/// usual orientation of the complex plane.
inline std::string encode_ppm(const XRayImage& img) {
  const GridSpec& g = img.grid;
  std::string out = "P6\n" + std::to_string(g.nx) + " " + std::to_string(g.ny) + "\n255\n";
  out.reserve(out.size() + static_cast<std::size_t>(3 * g.nx * g.ny));
  for (long row = 0; row < g.ny; ++row) {
    const long k = g.ny - 1 - row;
    for (long j = 0; j < g.nx; ++j) {
      const auto rgb = palette(img.at(j, k));
      out.append(reinterpret_cast<const char*>(rgb.data()), 3);
    }
  }
  return out;
}

inline void write_image(const XRayImage& img, const std::string& path) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  const std::string bytes = encode_ppm(img);
  f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!f) throw std::runtime_error("write failed: " + path);
}

/// "x,y,re,im,degraded", one row per pixel in row-major order.
inline void write_csv(const GridValues& v, const std::string& path) {
  std::ofstream f(path, std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << "x,y,re,im,degraded\n" << std::setprecision(17);
  for (long k = 0; k < v.grid.ny; ++k)
    for (long j = 0; j < v.grid.nx; ++j) {
      const Complex z = v.grid.center(j, k);
      const Complex w = v.at(j, k);
      f << z.real() << ',' << z.imag() << ',' << w.real() << ',' << w.imag() << ','
        << (v.is_degraded(j, k) ? 1 : 0) << '\n';
    }
  if (!f) throw std::runtime_error("write failed: " + path);
}

/// The integrand e^{-pi z^2} H_{-s}(z sqrt pi) / (1 + e^{-2 pi omega z}) with
/// s = 1/2 + i t, as a function of complex z.
class FigureIntegrand {
 public:
  explicit FigureIntegrand(double t, double tol = 1e-4, HermiteOptions opt = {})
      : nu_(-0.5, -t), tol_(tol), opt_(opt) {}

  Sample operator()(Complex z) const {
    const HermiteResult h = hermite_scaled(nu_, z * kSqrtPi, HermiteMethod::Auto, tol_, opt_);
    return {h.value * detail::logistic(2.0 * kPi * kOmega * z), h.degraded};
  }

  Complex order() const { return nu_; }

 private:
  Complex nu_;
  double tol_;
  HermiteOptions opt_;
};

struct Crossings {
  long re = 0;
  long im = 0;
  long degraded = 0;
};

/// Sign changes of Re f and Im f along y = 0 at n pixel centres of (x_min, x_max).
/// Degraded samples are skipped; the comparison bridges over them.
template <class F>
Crossings real_axis_crossings(F&& f, double x_min, double x_max, long n) {
  if (!(x_min < x_max) || n < 2) throw DomainError("real_axis_crossings: bad segment");
  Crossings c;
  bool have = false;
  Complex prev;
  const double dx = (x_max - x_min) / static_cast<double>(n);
  for (long j = 0; j < n; ++j) {
    const Sample s = detail::call_sample(f, Complex{x_min + (static_cast<double>(j) + 0.5) * dx, 0.0});
    if (s.degraded) {
      ++c.degraded;
      continue;
    }
    if (have) {
      c.re += detail::positive(prev.real()) != detail::positive(s.value.real());
      c.im += detail::positive(prev.imag()) != detail::positive(s.value.imag());
    }
    prev = s.value;
    have = true;
  }
  return c;
}

}  // namespace auxr
