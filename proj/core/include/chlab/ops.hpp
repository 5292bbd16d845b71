#ifndef CHLAB_OPS_HPP
#define CHLAB_OPS_HPP

#include <span>
#include <vector>

#include "chlab/field.hpp"

namespace chlab {

// grid <-> spectral
SpectralField analyze(std::span<const double> samples, const DomainSpec& dom);
std::vector<double> synthesize(const SpectralField& f);

// d^n/dx^n via (i xi)^n
SpectralField derivative(const SpectralField& f, int order = 1);

// (1 - d^2/dx^2)^{-1}: divide by 1 + xi^2
SpectralField helmholtz_inverse(const SpectralField& f);

/* Convolution with the periodized Helmholtz-Green kernel
 *   p_L(x) = cosh(x - L/2)/(2 sinh(L/2)) = (e^{-x} + e^{-(L-x)}) / (2(1 - e^{-L})),
 * x in [0, L], applied through the kernel's exact Fourier coefficients
 * p_hat(xi_j) = 1/(L (1 + xi_j^2)).  Must agree with helmholtz_inverse: this is
 * the kernel identity (1 - dxx) p = delta on the lattice. */
SpectralField green_convolve(const SpectralField& f);

// stable closed form of p_L at wrapped position x in [0, L)
double green_kernel_value(double x, double length);
// analytic Fourier coefficient of p_L (from the closed-form cosh integral)
double green_kernel_coefficient(double xi, double length);

// 2/3-rule: zero all |xi| > (2/3)(N/2)/M; idempotent
SpectralField dealias(const SpectralField& f);

// exact Fourier-sum evaluation at arbitrary x (not grid interpolation)
double eval_at(const SpectralField& f, double x);
// exact Fourier-sum evaluation of the n-th derivative at x
double eval_deriv_at(const SpectralField& f, double x, int order);

// max_i |u(x_i) + u(-x_i)| on the grid (0 for odd fields)
double oddness_defect(const SpectralField& f);

// u(x) -> -u(-x) (mirror conjugation); odd fields are fixed points
SpectralField mirror_negate(const SpectralField& f);

double linf_grid(const SpectralField& f);

}  // namespace chlab

#endif
