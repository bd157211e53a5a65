#pragma once

#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace cpl {

using Point = Eigen::VectorXd;

/// Coordinate chart of real dimension 2n with an open box domain.
struct Chart {
  int real_dim = 0;
  std::vector<std::pair<double, double>> box;
  std::string label;

  Chart() = default;
  Chart(int dim, std::vector<std::pair<double, double>> b, std::string lbl)
      : real_dim(dim), box(std::move(b)), label(std::move(lbl)) {
    if (real_dim < 4 || real_dim % 2 != 0)
      throw std::invalid_argument("chart dimension must be even and >= 4");
    if (int(box.size()) != real_dim) throw std::invalid_argument("box size mismatch");
    for (auto& iv : box)
      if (!(iv.first < iv.second)) throw std::invalid_argument("empty chart interval");
  }

  static Chart centered_box(int dim, double half_width, std::string lbl) {
    std::vector<std::pair<double, double>> b(dim, {-half_width, half_width});
    return Chart(dim, std::move(b), std::move(lbl));
  }

  bool interior(const Point& p) const {
    for (int i = 0; i < real_dim; ++i)
      if (!(p[i] > box[i].first && p[i] < box[i].second)) return false;
    return true;
  }
};

constexpr uint64_t kDefaultSeed = 20240817ull;

/// Draws points uniformly from the centered sub-box covering 80% of each
/// interval, keeping samples away from boundary blow-ups.
class Sampler {
 public:
  explicit Sampler(uint64_t seed = kDefaultSeed) : rng_(seed) {}

  Point interior_point(const Chart& chart, double shrink = 0.8) {
    Point p(chart.real_dim);
    for (int i = 0; i < chart.real_dim; ++i) {
      const double lo = chart.box[i].first, hi = chart.box[i].second;
      const double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo) * shrink;
      std::uniform_real_distribution<double> dist(c - h, c + h);
      p[i] = dist(rng_);
    }
    return p;
  }

  std::vector<Point> interior_points(const Chart& chart, int count, double shrink = 0.8) {
    std::vector<Point> pts;
    pts.reserve(count);
    for (int i = 0; i < count; ++i) pts.push_back(interior_point(chart, shrink));
    return pts;
  }

  double uniform(double lo, double hi) {
    std::uniform_real_distribution<double> dist(lo, hi);
    return dist(rng_);
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace cpl
