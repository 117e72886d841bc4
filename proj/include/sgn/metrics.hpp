#pragma once

#include <span>
#include <vector>

namespace sgn {

/// Scores for the positive class (label 1).
struct Metrics {
  double f1 = 0.0;
  double precision = 0.0;
  double recall = 0.0;
};

/// Precision (recall) is 0 when nothing is predicted (present) positive;
/// F1 is 0 when precision + recall is 0.
Metrics f1_score(std::span<const int> y_true, std::span<const int> y_pred);

/// Relative improvement in percent: (combined - original) / original * 100.
double gain(double f1_combined, double f1_original);

struct FeatureImportance {
  std::vector<double> percent;  // |beta_i| / sum |beta| * 100
  bool uniform_fallback = false;  // every weight was zero
};

FeatureImportance feature_importance(std::span<const double> weights);

}  // namespace sgn
