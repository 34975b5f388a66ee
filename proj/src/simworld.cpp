#include "qfilt/simworld.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qfilt/core/truncated_normal.hpp"
#include "qfilt/errors.hpp"

namespace qfilt {

std::string_view to_string(GeometryKind kind) {
  return kind == GeometryKind::chain_1d ? "chain_1d" : "grid_2d";
}

std::string_view to_string(FieldKind kind) {
  switch (kind) {
    case FieldKind::linear_1d: return "linear_1d";
    case FieldKind::square_2d: return "square_2d";
    case FieldKind::gaussian_2d: return "gaussian_2d";
  }
  return "unknown";
}

GeometryKind parse_geometry_kind(std::string_view name) {
  if (name == "chain_1d") return GeometryKind::chain_1d;
  if (name == "grid_2d") return GeometryKind::grid_2d;
  throw ConfigError("unknown geometry kind: " + std::string(name));
}

FieldKind parse_field_kind(std::string_view name) {
  if (name == "linear_1d") return FieldKind::linear_1d;
  if (name == "square_2d") return FieldKind::square_2d;
  if (name == "gaussian_2d") return FieldKind::gaussian_2d;
  throw ConfigError("unknown field kind: " + std::string(name));
}

Geometry::Geometry(GeometryKind kind, std::vector<std::array<double, 2>> coordinates,
                   double spacing)
    : kind_(kind), coordinates_(std::move(coordinates)), spacing_(spacing) {
  const std::size_t d = coordinates_.size();
  distances_.assign(d * d, 0.0);
  min_separation_ = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t q = j + 1; q < d; ++q) {
      const double dist = std::hypot(coordinates_[j][0] - coordinates_[q][0],
                                     coordinates_[j][1] - coordinates_[q][1]);
      distances_[j * d + q] = dist;
      distances_[q * d + j] = dist;
      if (dist > 0.0) min_separation_ = std::min(min_separation_, dist);
      max_separation_ = std::max(max_separation_, dist);
    }
  }
  if (!std::isfinite(min_separation_)) min_separation_ = spacing_;
  if (max_separation_ == 0.0) max_separation_ = spacing_;
}

Geometry make_geometry(GeometryKind kind, std::size_t d, double spacing) {
  if (d < 1) throw ConfigError("make_geometry: need d >= 1");
  if (!(spacing > 0.0)) throw ConfigError("make_geometry: spacing must be positive");
  std::vector<std::array<double, 2>> coords;
  coords.reserve(d);
  if (kind == GeometryKind::chain_1d) {
    for (std::size_t k = 0; k < d; ++k) coords.push_back({spacing * static_cast<double>(k), 0.0});
  } else {
    const auto side = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(d))));
    if (side * side != d) throw ConfigError("make_geometry: grid_2d needs a perfect-square d");
    // Row-major: index = row * side + col.
    for (std::size_t row = 0; row < side; ++row) {
      for (std::size_t col = 0; col < side; ++col) {
        coords.push_back({spacing * static_cast<double>(col), spacing * static_cast<double>(row)});
      }
    }
  }
  return Geometry(kind, std::move(coords), spacing);
}

namespace {

std::size_t grid_side(const Geometry& geometry) {
  return static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(geometry.size()))));
}

}  // namespace

TrueField make_field(FieldKind kind, const Geometry& geometry) {
  const std::size_t d = geometry.size();
  TrueField field{kind, std::vector<double>(d, kFieldLow)};
  switch (kind) {
    case FieldKind::linear_1d: {
      if (geometry.kind() != GeometryKind::chain_1d) {
        throw ConfigError("make_field: linear_1d requires a chain_1d geometry");
      }
      for (std::size_t k = 0; k < d; ++k) {
        const double frac = d == 1 ? 0.0 : static_cast<double>(k) / static_cast<double>(d - 1);
        field.values[k] = kFieldLow + (kFieldHigh - kFieldLow) * frac;
      }
      field.values[d - 1] = d == 1 ? kFieldLow : kFieldHigh;
      break;
    }
    case FieldKind::square_2d: {
      if (geometry.kind() != GeometryKind::grid_2d) {
        throw ConfigError("make_field: square_2d requires a grid_2d geometry");
      }
      const std::size_t side = grid_side(geometry);
      std::size_t block = (side + 1) / 2;
      // Shrink by one when the block cannot sit symmetrically inside the lattice.
      if ((side - block) % 2 == 1 && block > 1) block -= 1;
      const std::size_t start = (side - block) / 2;
      for (std::size_t row = start; row < start + block; ++row) {
        for (std::size_t col = start; col < start + block; ++col) {
          field.values[row * side + col] = kFieldHigh;
        }
      }
      break;
    }
    case FieldKind::gaussian_2d: {
      if (geometry.kind() != GeometryKind::grid_2d) {
        throw ConfigError("make_field: gaussian_2d requires a grid_2d geometry");
      }
      const std::size_t side = grid_side(geometry);
      const double half_width = 0.5 * static_cast<double>(side - 1) * geometry.spacing();
      const double centre = half_width;
      const double sigma_g = side > 1 ? half_width / 2.0 : geometry.spacing();
      for (std::size_t k = 0; k < d; ++k) {
        const auto& p = geometry.coordinates()[k];
        const double r2 = (p[0] - centre) * (p[0] - centre) + (p[1] - centre) * (p[1] - centre);
        field.values[k] =
            kFieldLow + (kFieldHigh - kFieldLow) * std::exp(-r2 / (2.0 * sigma_g * sigma_g));
      }
      break;
    }
  }
  return field;
}

int oracle_measure(const TrueField& field, std::size_t j, const MeasurementModel& model,
                   bool noise_on, SeededRng& rng) {
  if (j >= field.values.size()) throw ConfigError("oracle_measure: location out of range");
  double v = 0.0;
  if (noise_on && model.sigma_v() > 0.0) {
    v = sample_truncated_normal(0.0, std::sqrt(model.sigma_v()),
                                Interval{-model.bound_b(), model.bound_b()}, rng);
  }
  return sample_outcome(ramsey_forward(field.values[j]) + v + 0.5, rng);
}

}  // namespace qfilt
