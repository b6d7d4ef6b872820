#include "evauth/embedding.hpp"

#include <cmath>

#include "evauth/error.hpp"

namespace evauth {

namespace {

void check_finite(std::span<const double> values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw Error(ErrorCode::invalid_argument,
                  "embedding value at index " + std::to_string(i) + " is not finite");
    }
  }
}

}  // namespace

Embedding128::Embedding128(const std::array<double, kDim>& values) : values_(values) {
  check_finite(values_);
}

Embedding128 Embedding128::from_values(std::span<const double> values) {
  if (values.size() != kDim) {
    throw Error(ErrorCode::invalid_argument,
                "embedding must contain exactly 128 values, got " +
                    std::to_string(values.size()));
  }
  check_finite(values);
  Embedding128 e;
  for (std::size_t i = 0; i < kDim; ++i) e.values_[i] = values[i];
  return e;
}

double distance(const Embedding128& a, const Embedding128& b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < Embedding128::kDim; ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

LabeledEmbedding::LabeledEmbedding(std::string label_in, Embedding128 embedding_in)
    : label(std::move(label_in)), embedding(embedding_in) {
  if (label.empty()) {
    throw Error(ErrorCode::invalid_argument, "label must be non-empty");
  }
  if (label.find('/') != std::string::npos || label.find('\\') != std::string::npos) {
    throw Error(ErrorCode::invalid_argument, "label must not contain path separators: " + label);
  }
}

}  // namespace evauth
