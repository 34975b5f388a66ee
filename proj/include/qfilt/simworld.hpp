#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qfilt/core/rng.hpp"
#include "qfilt/measurement.hpp"

namespace qfilt {

enum class GeometryKind { chain_1d, grid_2d };
enum class FieldKind { linear_1d, square_2d, gaussian_2d };

std::string_view to_string(GeometryKind kind);
std::string_view to_string(FieldKind kind);
GeometryKind parse_geometry_kind(std::string_view name);
FieldKind parse_field_kind(std::string_view name);

/// Qubit coordinates (1-D chains use y = 0) and the pairwise distance matrix.
class Geometry {
 public:
  Geometry(GeometryKind kind, std::vector<std::array<double, 2>> coordinates, double spacing);

  GeometryKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return coordinates_.size(); }
  double spacing() const noexcept { return spacing_; }
  const std::vector<std::array<double, 2>>& coordinates() const noexcept { return coordinates_; }
  double distance(std::size_t j, std::size_t q) const { return distances_[j * size() + q]; }

  /// Smallest non-zero pairwise separation (spacing when d = 1).
  double min_separation() const noexcept { return min_separation_; }
  double max_separation() const noexcept { return max_separation_; }

 private:
  GeometryKind kind_;
  std::vector<std::array<double, 2>> coordinates_;
  double spacing_;
  std::vector<double> distances_;
  double min_separation_ = 0.0;
  double max_separation_ = 0.0;
};

/// Regular chain or square lattice. grid_2d requires d to be a perfect square.
Geometry make_geometry(GeometryKind kind, std::size_t d, double spacing = 1.0);

/// Static ground-truth phase field, one value per qubit in [0, pi].
struct TrueField {
  FieldKind kind;
  std::vector<double> values;
};

inline constexpr double kFieldLow = 0.25 * 3.14159265358979323846;
inline constexpr double kFieldHigh = 0.75 * 3.14159265358979323846;

/// linear_1d: ramp low->high along a chain. square_2d: centred high block.
/// gaussian_2d: high radial bump over a low floor.
TrueField make_field(FieldKind kind, const Geometry& geometry);

/// One single-shot Ramsey measurement of qubit j. With noise_on, the
/// amplitude noise is N(0, sigma_v) truncated to [-b, b].
int oracle_measure(const TrueField& field, std::size_t j, const MeasurementModel& model,
                   bool noise_on, SeededRng& rng);

}  // namespace qfilt
