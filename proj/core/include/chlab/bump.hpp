#ifndef CHLAB_BUMP_HPP
#define CHLAB_BUMP_HPP

#include <memory>
#include <vector>

#include "chlab/domain.hpp"

namespace chlab {

/* Smooth dyadic cutoffs.
 *
 * eta: even, [0,1], radially non-increasing, == 1 for |xi| <= 5/4 and == 0 for
 * |xi| >= 8/5.  Built as indicator([-a,a]) * mollifier(width d) with
 * a = 5/4 + d, so the plateau and support constraints hold exactly (not only
 * to quadrature accuracy).  d defaults to (8/5 - 5/4)/2, the largest width for
 * which the support constraint is met.
 *
 * chi_tilde: even, non-negative, smooth annular bump supported in
 * 0.85 <= |xi| <= 1.2, which sits inside {chi_0 == 1}, so chi_tilde*chi_0 ==
 * chi_tilde identically.
 *
 * chi_k(xi)  = eta(xi/2^k) - eta(xi/2^{k-1})   (dyadic annulus k >= 1)
 * chi_le(k)  = eta(xi/2^k)
 */
class BumpProfile {
  public:
    static constexpr double kPlateau = 1.25;   // eta == 1 inside
    static constexpr double kSupport = 1.6;    // eta == 0 outside
    static constexpr double kAnnulusLo = 0.85; // chi_tilde support
    static constexpr double kAnnulusHi = 1.2;

    explicit BumpProfile(double sharpness = (kSupport - kPlateau) / 2.0);

    double sharpness() const { return d_; }

    double eta(double xi) const;
    double chi_tilde(double xi) const;
    double chi_k(int k, double xi) const { return eta(std::ldexp(xi, -k)) - eta(std::ldexp(xi, -k + 1)); }
    double chi_le(int k, double xi) const { return eta(std::ldexp(xi, -k)); }

    /* Largest k such that chi_le(kmax) == 1 across the resolvable lattice is
     * the natural truncation of the dyadic ladder: ceil(log2(xi_max/plateau)).
     * Projections accept 1 <= k <= kmax (P_k) and 0 <= k <= kmax (P_le). */
    static int kmax(const DomainSpec& dom);

    /* Fourier transform of the unit-mass mollifier, rho_hat(s) =
     * int rho(u) e^{-i s u} du (real, even); used by the Novikov data
     * construction, where eta appears as a spatial cutoff. */
    double mollifier_hat(double s) const;
    // eta_hat(s) = 2 sin(a s)/s * rho_hat(d s); eta_hat(0) = 2a
    double eta_hat(double s) const;

  private:
    double d_;          // mollifier half-width
    double a_;          // indicator half-width = plateau + d
    std::shared_ptr<const std::vector<double>> cdf_;  // mollifier CDF on [-1,1]
    double cdf_value(double u) const;
};

}  // namespace chlab

#endif
