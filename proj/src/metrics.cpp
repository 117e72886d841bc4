#include "sgn/metrics.hpp"

#include <cmath>
#include <string>

#include "sgn/graph.hpp"

namespace sgn {

Metrics f1_score(std::span<const int> y_true, std::span<const int> y_pred) {
  if (y_true.size() != y_pred.size()) {
    throw Error("f1_score: " + std::to_string(y_true.size()) + " true labels vs " +
                std::to_string(y_pred.size()) + " predictions");
  }
  std::size_t tp = 0, fp = 0, fn = 0;
  for (std::size_t i = 0; i < y_true.size(); ++i) {
    const bool t = y_true[i] == 1;
    const bool p = y_pred[i] == 1;
    tp += t && p;
    fp += !t && p;
    fn += t && !p;
  }
  Metrics m;
  if (tp + fp > 0) m.precision = static_cast<double>(tp) / static_cast<double>(tp + fp);
  if (tp + fn > 0) m.recall = static_cast<double>(tp) / static_cast<double>(tp + fn);
  if (m.precision + m.recall > 0) {
    m.f1 = 2.0 * m.precision * m.recall / (m.precision + m.recall);
  }
  return m;
}

double gain(double f1_combined, double f1_original) {
  if (!(f1_original > 0)) throw Error("gain is undefined for a zero baseline F1");
  return (f1_combined - f1_original) / f1_original * 100.0;
}

FeatureImportance feature_importance(std::span<const double> weights) {
  if (weights.empty()) throw Error("feature_importance needs at least one weight");
  FeatureImportance out;
  double total = 0.0;
  for (double w : weights) total += std::abs(w);
  out.percent.resize(weights.size());
  if (total == 0.0) {
    out.uniform_fallback = true;
    for (double& v : out.percent) v = 100.0 / static_cast<double>(weights.size());
    return out;
  }
  for (std::size_t i = 0; i < weights.size(); ++i) out.percent[i] = std::abs(weights[i]) / total * 100.0;
  return out;
}

}  // namespace sgn
