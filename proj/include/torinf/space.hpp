#pragma once

#include <Eigen/Dense>

#include <optional>
#include <span>
#include <vector>

namespace torinf {

// Realisations are rows, variables are columns. Row-major so a point's
// coordinates are contiguous in memory for the distance kernels.
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Wrapped absolute difference along one axis. `period == 0` means the axis
/// is aperiodic. Periodic inputs are assumed canonical, i.e. in [0, period).
inline double wrapped_diff_raw(double a, double b, double period) noexcept {
  double d = a - b;
  if (d < 0) d = -d;
  if (period > 0.0) {
    const double w = period - d;
    if (w < d) d = w;
  }
  return d;
}

/// Checked variant matching the public contract: rejects non-finite input.
double wrapped_diff(double a, double b, std::optional<double> period);

// Per-axis geometry: dims plus an optional wrap length per axis.
// Internally a period of 0 denotes an aperiodic axis.
class PeriodicSpace {
 public:
  PeriodicSpace() = default;
  explicit PeriodicSpace(std::vector<std::optional<double>> periods);

  static PeriodicSpace aperiodic(int dims);
  static PeriodicSpace torus(int dims, double period);

  int dims() const noexcept { return static_cast<int>(periods_.size()); }
  std::optional<double> period(int axis) const;
  double period_raw(int axis) const { return periods_[static_cast<size_t>(axis)]; }
  bool is_periodic(int axis) const { return periods_[static_cast<size_t>(axis)] > 0.0; }
  bool fully_periodic() const noexcept;
  bool fully_aperiodic() const noexcept;

  PeriodicSpace subset(std::span<const int> axes) const;
  /// Same dims, every axis aperiodic. Used by the unwrapped-estimation arm.
  PeriodicSpace without_periods() const;

  bool operator==(const PeriodicSpace&) const = default;

 private:
  std::vector<double> periods_;  // 0 = aperiodic
};

double max_norm_dist(std::span<const double> p, std::span<const double> q,
                     const PeriodicSpace& space);

// N x dims realisations with their geometry. Construction validates that
// every coordinate is finite and that periodic coordinates are canonical;
// from_raw() wraps periodic coordinates into [0, period) first.
class PointCloud {
 public:
  PointCloud() = default;
  PointCloud(PeriodicSpace space, Matrix data);

  static PointCloud from_raw(PeriodicSpace space, Matrix data);

  Index size() const noexcept { return data_.rows(); }
  int dims() const noexcept { return space_.dims(); }
  const PeriodicSpace& space() const noexcept { return space_; }
  const Matrix& data() const noexcept { return data_; }

  const double* row(Index i) const { return data_.data() + i * data_.cols(); }
  double coord(Index i, int axis) const { return data_(i, axis); }

  /// Wrapped max-norm distance between realisations i and j.
  double distance(Index i, Index j) const noexcept {
    const double* a = row(i);
    const double* b = row(j);
    double m = 0.0;
    for (int d = 0; d < dims(); ++d) {
      const double w = wrapped_diff_raw(a[d], b[d], space_.period_raw(d));
      if (w > m) m = w;
    }
    return m;
  }

  /// Wrapped max-norm distance from an external point to realisation j.
  double distance_to(std::span<const double> p, Index j) const noexcept {
    const double* b = row(j);
    double m = 0.0;
    for (int d = 0; d < dims(); ++d) {
      const double w = wrapped_diff_raw(p[d], b[d], space_.period_raw(d));
      if (w > m) m = w;
    }
    return m;
  }

  PointCloud project(std::span<const int> axes) const;

  /// True when every row equals row 0 (degenerate for estimation).
  bool all_rows_identical() const;

  std::size_t memory_bytes() const noexcept {
    return static_cast<std::size_t>(data_.size()) * sizeof(double);
  }

 private:
  PeriodicSpace space_;
  Matrix data_;
};

/// Wrap a coordinate into [0, period). Exact for values already canonical.
double wrap_coordinate(double x, double period);

/// Wrap an angle into [0, 2*pi).
double wrap_angle(double theta);

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

}  // namespace torinf
