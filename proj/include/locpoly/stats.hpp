#pragma once

namespace locpoly::stats {

double normal_pdf(double x);
double normal_cdf(double x);

// Inverse standard normal CDF: Acklam's rational approximation polished by
// one Halley step against the erfc-based CDF (absolute error well under 1e-8).
double normal_quantile(double p);

} // namespace locpoly::stats
