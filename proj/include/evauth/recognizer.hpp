#pragma once

#include <optional>
#include <string>

#include "evauth/embedding.hpp"

namespace evauth {

// Match when the winning label's nearest stored vector is within threshold,
// Unknown otherwise. An Unknown from a non-empty model still carries that
// nearest distance; only an empty model leaves it absent.
struct RecognitionResult {
  enum class Kind { match, unknown };

  Kind kind = Kind::unknown;
  std::string label;                       // match only
  std::optional<double> nearest_distance;  // absent only for an empty model

  bool is_match() const { return kind == Kind::match; }
  double distance() const { return nearest_distance.value(); }

  static RecognitionResult match(std::string label, double dist);
  static RecognitionResult unknown(std::optional<double> nearest = std::nullopt);
};

// What every classifier (and the benchmark harness) programs against.
class Recognizer {
 public:
  virtual ~Recognizer() = default;
  virtual RecognitionResult recognize(const Embedding128& query) const = 0;
};

}  // namespace evauth
