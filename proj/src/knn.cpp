#include "evauth/knn.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string_view>

#include "evauth/error.hpp"

namespace evauth {

RecognitionResult RecognitionResult::match(std::string label, double dist) {
  RecognitionResult r;
  r.kind = Kind::match;
  r.label = std::move(label);
  r.nearest_distance = dist;
  return r;
}

RecognitionResult RecognitionResult::unknown(std::optional<double> nearest) {
  RecognitionResult r;
  r.kind = Kind::unknown;
  r.nearest_distance = nearest;
  return r;
}

KnnModel::KnnModel(std::vector<LabeledEmbedding> training, int k, double threshold)
    : training_(std::move(training)), k_(k), threshold_(threshold) {}

KnnModel KnnModel::fit(std::vector<LabeledEmbedding> training, int k, double threshold) {
  if (k < 1) {
    throw Error(ErrorCode::invalid_argument, "k must be >= 1, got " + std::to_string(k));
  }
  if (!(threshold > 0.0)) {
    throw Error(ErrorCode::invalid_argument, "threshold must be positive");
  }
  if (!training.empty()) {
    k = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(k), training.size()));
  }
  return KnnModel(std::move(training), k, threshold);
}

RecognitionResult KnnModel::recognize(const Embedding128& query) const {
  if (training_.empty()) {
    return RecognitionResult::unknown();
  }

  struct Neighbor {
    double dist;
    const std::string* label;
  };
  std::vector<Neighbor> neighbors;
  neighbors.reserve(training_.size());
  for (const auto& entry : training_) {
    neighbors.push_back({distance(entry.embedding, query), &entry.label});
  }

  const auto by_dist_then_label = [](const Neighbor& a, const Neighbor& b) {
    if (a.dist != b.dist) return a.dist < b.dist;
    return *a.label < *b.label;
  };
  const std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(k_), neighbors.size());
  std::partial_sort(neighbors.begin(), neighbors.begin() + static_cast<std::ptrdiff_t>(k),
                    neighbors.end(), by_dist_then_label);

  struct Candidate {
    std::size_t votes = 0;
    double nearest = std::numeric_limits<double>::infinity();
  };
  std::map<std::string_view, Candidate> tally;
  for (std::size_t i = 0; i < k; ++i) {
    auto& c = tally[*neighbors[i].label];
    c.votes += 1;
    c.nearest = std::min(c.nearest, neighbors[i].dist);
  }

  // Map iteration is label-ascending, so requiring a strict improvement to
  // replace the running winner resolves full ties to the smaller label.
  std::string_view winner_label;
  Candidate winner;
  for (const auto& [label, cand] : tally) {
    const bool better = cand.votes > winner.votes ||
                        (cand.votes == winner.votes && cand.nearest < winner.nearest);
    if (winner.votes == 0 || better) {
      winner_label = label;
      winner = cand;
    }
  }

  if (winner.nearest > threshold_) {
    return RecognitionResult::unknown(winner.nearest);
  }
  return RecognitionResult::match(std::string(winner_label), winner.nearest);
}

std::vector<std::string> KnnModel::labels() const {
  std::vector<std::string> out;
  for (const auto& entry : training_) out.push_back(entry.label);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace evauth
