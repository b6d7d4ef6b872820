#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>

namespace evauth {

// A face as 128 real coordinates. Instances are finite by construction
// (no NaN, no infinity), so downstream math never re-checks.
class Embedding128 {
 public:
  static constexpr std::size_t kDim = 128;

  Embedding128() = default;  // all zeros
  explicit Embedding128(const std::array<double, kDim>& values);

  // Validates length and finiteness; throws evauth::Error on violation.
  static Embedding128 from_values(std::span<const double> values);

  double operator[](std::size_t i) const { return values_[i]; }
  const std::array<double, kDim>& values() const { return values_; }

  bool operator==(const Embedding128&) const = default;

 private:
  std::array<double, kDim> values_{};
};

// Euclidean (L2) distance. Symmetric; zero iff elementwise equal.
double distance(const Embedding128& a, const Embedding128& b);

// An embedding tagged with the identity it belongs to. Labels come from
// dataset folder names or store user ids: non-empty, no path separators.
struct LabeledEmbedding {
  std::string label;
  Embedding128 embedding;

  LabeledEmbedding(std::string label, Embedding128 embedding);
};

}  // namespace evauth
