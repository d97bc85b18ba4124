#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <iterator>

#include "auxr/xray.hpp"

using namespace auxr;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("auxr_test_" + name)).string();
}

}  // namespace

TEST(Grid, IdentityCenters) {
  const GridValues v = eval_grid([](Complex z) { return z; }, GridSpec::square(1.0, 2));
  EXPECT_EQ(v.at(0, 0), Complex(-0.5, -0.5));
  EXPECT_EQ(v.at(1, 0), Complex(0.5, -0.5));
  EXPECT_EQ(v.at(0, 1), Complex(-0.5, 0.5));
  EXPECT_EQ(v.at(1, 1), Complex(0.5, 0.5));
  EXPECT_EQ(v.degraded_count(), 0);
}

TEST(Grid, Constant) {
  const Complex c{2.0, -3.0};
  const GridValues v = eval_grid([c](Complex) { return c; }, GridSpec::square(4.0, 7));
  for (Complex w : v.values) EXPECT_EQ(w, c);
}

TEST(Grid, Validation) {
  EXPECT_THROW(eval_grid([](Complex z) { return z; }, GridSpec{1, -1, -1, 1, 4, 4}), DomainError);
  EXPECT_THROW(eval_grid([](Complex z) { return z; }, GridSpec{-1, 1, -1, 1, 1, 4}), DomainError);
}

TEST(Grid, NonFiniteAndThrowingAreDegraded) {
  auto f = [](Complex z) -> Complex {
    if (z.real() < 0 && z.imag() < 0) throw std::runtime_error("boom");
    if (z.real() > 0 && z.imag() > 0) return {std::nan(""), 0.0};
    return z;
  };
  const GridValues v = eval_grid(f, GridSpec::square(1.0, 2));
  EXPECT_TRUE(v.is_degraded(0, 0));
  EXPECT_TRUE(v.is_degraded(1, 1));
  EXPECT_FALSE(v.is_degraded(1, 0));
  EXPECT_EQ(detect_zero_curves(v).at(0, 0), PixelClass::Degraded);
}

TEST(Grid, ThreadCountIrrelevant) {
  auto f = [](Complex z) { return std::sin(z) * std::exp(z); };
  const GridSpec g = GridSpec::square(3.0, 33);
  const GridValues a = eval_grid(f, g, 1);
  const GridValues b = eval_grid(f, g, 4);
  EXPECT_EQ(a.values, b.values);
}

TEST(ZeroCurves, Identity) {
  const XRayImage img = detect_zero_curves(eval_grid([](Complex z) { return z; }, GridSpec::square(1.0, 8)));
  // Re z changes sign between columns 3 and 4, Im z between rows 3 and 4.
  for (long k = 0; k < 8; ++k)
    for (long j = 0; j < 8; ++j) {
      const PixelClass c = img.at(j, k);
      const bool re = j == 3, im = k == 3;
      const PixelClass expect = re && im ? PixelClass::Both
                                : re     ? PixelClass::ReZero
                                : im     ? PixelClass::ImZero
                                         : PixelClass::None;
      EXPECT_EQ(c, expect) << j << "," << k;
    }
  EXPECT_EQ(img.count(PixelClass::Both), 1);
}

TEST(ZeroCurves, ExponentialHasNoZeros) {
  const GridSpec g{-2.0, 2.0, -7.0, 7.0, 40, 141};
  const XRayImage img = detect_zero_curves(eval_grid([](Complex z) { return std::exp(z); }, g));
  EXPECT_EQ(img.count(PixelClass::Both), 0);
  EXPECT_GT(img.count(PixelClass::ImZero), 0);
  for (long k = 0; k + 1 < g.ny; ++k) {
    const double y = g.center(0, k).imag();
    const double y_up = y + g.dy();
    const bool crosses = std::floor(y / kPi) != std::floor(y_up / kPi);
    EXPECT_EQ(img.at(5, k) == PixelClass::ImZero, crosses) << k;
  }
}

TEST(ZeroCurves, ZeroCountsPositive) {
  GridValues v;
  v.grid = GridSpec::square(1.0, 2);
  v.values = {Complex(0.0, 1.0), Complex(1.0, 1.0), Complex(-0.0, 1.0), Complex(2.0, 1.0)};
  v.degraded.assign(4, 0);
  EXPECT_EQ(detect_zero_curves(v).count(PixelClass::None), 4);
}

TEST(Image, BackgroundPpm) {
  XRayImage img{GridSpec::square(1.0, 2), std::vector<PixelClass>(4, PixelClass::None)};
  const std::string bytes = encode_ppm(img);
  ASSERT_EQ(bytes.size(), 11u + 12u);
  EXPECT_EQ(bytes.substr(0, 11), "P6\n2 2\n255\n");
  for (std::size_t i = 11; i < bytes.size(); ++i) EXPECT_EQ(static_cast<unsigned char>(bytes[i]), 255);
}

TEST(Image, PaletteAndOrientation) {
  // Pixel (1, 0) is bottom-right, so it lands in the second image row.
  XRayImage img{GridSpec::square(1.0, 2), std::vector<PixelClass>(4, PixelClass::None)};
  img.classes[1] = PixelClass::Both;
  img.classes[2] = PixelClass::Degraded;
  const std::string bytes = encode_ppm(img);
  const std::string header = "P6\n2 2\n255\n";
  auto px = [&](int row, int col) {
    const std::size_t o = header.size() + static_cast<std::size_t>(3 * (row * 2 + col));
    return std::array<int, 3>{static_cast<unsigned char>(bytes[o]), static_cast<unsigned char>(bytes[o + 1]),
                              static_cast<unsigned char>(bytes[o + 2])};
  };
  EXPECT_EQ(px(1, 1), (std::array<int, 3>{255, 0, 0}));
  EXPECT_EQ(px(0, 0), (std::array<int, 3>{255, 255, 0}));
  EXPECT_EQ(palette(PixelClass::ReZero), (std::array<std::uint8_t, 3>{0, 0, 0}));
  EXPECT_EQ(palette(PixelClass::ImZero), (std::array<std::uint8_t, 3>{128, 128, 128}));
}

TEST(Image, DeterministicFiles) {
  const GridSpec g = GridSpec::square(6.0, 48);
  const FigureIntegrand f(10.0);
  const std::string a = temp_path("a.ppm"), b = temp_path("b.ppm");
  write_image(detect_zero_curves(eval_grid(f, g)), a);
  write_image(detect_zero_curves(eval_grid(f, g, 1)), b);
  const std::string bytes = slurp(a);
  EXPECT_EQ(bytes.size(), std::string("P6\n48 48\n255\n").size() + 3u * 48u * 48u);
  EXPECT_EQ(bytes, slurp(b));
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST(Image, CsvLayout) {
  const GridValues v = eval_grid([](Complex z) { return z; }, GridSpec::square(1.0, 2));
  const std::string path = temp_path("grid.csv");
  write_csv(v, path);
  std::ifstream f(path);
  std::string line;
  std::getline(f, line);
  EXPECT_EQ(line, "x,y,re,im,degraded");
  std::getline(f, line);
  EXPECT_EQ(line, "-0.5,-0.5,-0.5,-0.5,0");
  int rows = 1;
  while (std::getline(f, line)) ++rows;
  EXPECT_EQ(rows, 4);
  std::filesystem::remove(path);
}

TEST(Figure, CoarseGridFinite) {
  const GridValues v = eval_grid(FigureIntegrand(10.0), GridSpec::square(6.0, 64));
  long finite = 0;
  for (std::size_t i = 0; i < v.values.size(); ++i)
    if (!v.degraded[i]) finite += is_finite(v.values[i]);
  EXPECT_GE(finite, 64 * 64 - 64);
  const XRayImage img = detect_zero_curves(v);
  EXPECT_GT(img.count(PixelClass::ReZero), 0);
  EXPECT_GT(img.count(PixelClass::ImZero), 0);
  long total = 0;
  for (auto c : {PixelClass::None, PixelClass::ReZero, PixelClass::ImZero, PixelClass::Both,
                 PixelClass::Degraded})
    total += img.count(c);
  EXPECT_EQ(total, 64 * 64);
}

TEST(Figure, AxisCrossingsCountSignChanges) {
  const Crossings c = real_axis_crossings([](Complex z) { return std::sin(z) + kI * std::cos(z); },
                                          -6.0, 6.0, 200);
  EXPECT_EQ(c.re, 3);  // sin vanishes at -pi, 0, pi
  EXPECT_EQ(c.im, 4);  // cos at +-pi/2, +-3pi/2
  EXPECT_EQ(c.degraded, 0);
}
