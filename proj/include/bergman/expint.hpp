#ifndef BERGMAN_EXPINT_HPP
#define BERGMAN_EXPINT_HPP

namespace bergman {

// Exponential integral E1(x) = int_x^inf t^-1 e^-t dt for x > 0.
// Power series with the Euler-Mascheroni constant for x <= 1, modified Lentz
// continued fraction for x > 1; >= 10 significant digits across the range.
double exp_integral_E1(double x);

// E1 given log(x), valid for x << 1 (series with the x-power terms dropped
// once they vanish at double precision). This is how the exp-coupled sweeps
// reach lambda where 3p - 4 = 3 exp(-lambda^{9/10}) underflows.
double exp_integral_E1_log(double log_x);

// e^x E1(x) given log(x); stays finite for tiny x.
double exp_integral_expE1_log(double log_x);

// The bracketing bounds e^-x/2 log(1 + 2/x) < E1(x) < e^-x log(1 + 1/x).
double e1_lower_bound(double x);
double e1_upper_bound(double x);

} // namespace bergman

#endif
