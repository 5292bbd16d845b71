#ifndef CHLAB_LP_HPP
#define CHLAB_LP_HPP

#include <limits>

#include "chlab/bump.hpp"
#include "chlab/field.hpp"

namespace chlab {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/* Norm indices for B^s_{p,r}; p, r in [1, inf]. */
struct NormSpec {
    double s = 0.0;
    double p = 2.0;
    double r = 2.0;

    NormSpec() = default;
    NormSpec(double s_, double p_, double r_);

    double conjugate_p() const;  // p' = p/(p-1)
};

// Littlewood-Paley projections: coefficient-wise chi_k(|xi|) resp. chi_le(k)
SpectralField project(const SpectralField& f, int k, const BumpProfile& bump);
SpectralField project_low(const SpectralField& f, int k, const BumpProfile& bump);

// L^p on the synthesis grid: rectangle quadrature for p < inf (spectrally
// accurate for band-limited integrands), grid max for p = inf
double lp_norm(const SpectralField& f, double p);

/* Inhomogeneous Besov norm
 *   ||P_le0 f||_p + || { 2^{ks} ||P_k f||_p }_{k=1..kmax} ||_{l^r}
 * (low block added, not folded into the sequence).  For r = inf the
 * aggregation is a supremum over the resolvable range 1..kmax. */
double besov_norm(const SpectralField& f, const NormSpec& spec, const BumpProfile& bump);

// H^s lattice sum: sqrt( L * sum_j (1+xi^2)^s |c_j|^2 ), both signs counted
double sobolev_norm(const SpectralField& f, double s);

struct LogInterpSides {
    double lhs;      // ||u_x||_inf
    double b1;       // ||u||_{B^1_{inf,inf}}
    double h2;       // ||u||_{H^2}
    double rhs_unit; // b1 * log2(2 + h2^2) + 1
};

// the three quantities of the log-interpolation bound
// ||u_x||_inf <= C ||u||_{B^1_{inf,inf}} log2(2 + ||u||_{H^2}^2) + C
LogInterpSides log_interp_sides(const SpectralField& u, const BumpProfile& bump);

}  // namespace chlab

#endif
