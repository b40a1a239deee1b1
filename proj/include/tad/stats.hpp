#pragma once

#include <vector>

namespace tad {

// p-th percentile (p in [0, 100]) with linear interpolation between closest
// ranks: index = p/100 * (n-1), value interpolated between floor and ceil.
// Used everywhere a percentile appears (threshold calibration, labeling
// quantiles) so all modules share one definition.
double percentile(std::vector<double> values, double p);

// Same, on data already sorted ascending.
double percentile_sorted(const std::vector<double>& sorted, double p);

// Quantile of the chi-squared distribution with `dof` degrees of freedom.
double chi_squared_quantile(double prob, double dof);

// Median of the squared Mahalanobis distances divided by the chi-squared
// median, the usual consistency factor for covariance estimates computed on
// a trimmed subset.
double mcd_consistency_factor(std::vector<double> squared_distances, double dims);

}  // namespace tad
