#ifndef BERGMAN_FIT_HPP
#define BERGMAN_FIT_HPP

#include <vector>

namespace bergman {

struct FitResult {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    double max_residual = 0.0;
    int n = 0;
};

// Least-squares line y = intercept + slope * x.
FitResult fit_line(const std::vector<double>& x, const std::vector<double>& y);

// Same in log-log coordinates (inputs must be positive).
FitResult fit_loglog(const std::vector<double>& x, const std::vector<double>& y);

} // namespace bergman

#endif
