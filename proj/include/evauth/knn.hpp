#pragma once

#include <vector>

#include "evauth/embedding.hpp"
#include "evauth/recognizer.hpp"

namespace evauth {

// Exhaustive k-nearest-neighbour classifier with threshold-based unknown
// rejection. The model is immutable after fit and scans the whole training
// set per query; at enrollment scale that linear scan is the simplest thing
// that can be correct, and it is what the accuracy benchmark measures.
//
// Determinism: neighbours order by (distance, label), votes tie-break to the
// label with the smaller nearest distance and then to the lexicographically
// smaller label, so shuffling the training set never changes a prediction.
class KnnModel final : public Recognizer {
 public:
  // Requires k >= 1 and threshold > 0; k is clamped to the training size
  // when the training set is non-empty. An empty training set is valid and
  // makes every query Unknown.
  static KnnModel fit(std::vector<LabeledEmbedding> training, int k, double threshold);

  RecognitionResult recognize(const Embedding128& query) const override;

  int k() const { return k_; }
  double threshold() const { return threshold_; }
  std::size_t size() const { return training_.size(); }
  std::vector<std::string> labels() const;  // distinct, sorted

 private:
  KnnModel(std::vector<LabeledEmbedding> training, int k, double threshold);

  std::vector<LabeledEmbedding> training_;
  int k_;
  double threshold_;
};

}  // namespace evauth
