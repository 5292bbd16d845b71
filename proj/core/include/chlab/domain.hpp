#ifndef CHLAB_DOMAIN_HPP
#define CHLAB_DOMAIN_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace chlab {

inline constexpr double kPi = 3.14159265358979323846;

enum class Geometry { torus, line_approx };

/* Periodic computational domain of circumference L = 2*pi*M sampled on N
 * equispaced points.  The frequency lattice is xi = j/M, |j| <= N/2.
 * Torus mode pins M = 1 (integer frequencies); line-approximation mode uses
 * a large M so that spatially localized data see an effectively infinite
 * line (periodization error of the Helmholtz kernel is O(e^{-L/2})). */
struct DomainSpec {
    int M = 1;
    int N = 0;
    Geometry mode = Geometry::torus;

    DomainSpec() = default;
    DomainSpec(int M_, int N_, Geometry mode_) : M(M_), N(N_), mode(mode_) {
        validate();
    }

    static DomainSpec torus(int N_) { return DomainSpec(1, N_, Geometry::torus); }
    static DomainSpec line(int M_, int N_) {
        return DomainSpec(M_, N_, Geometry::line_approx);
    }

    void validate() const {
        if (N < 16 || (N & (N - 1)) != 0)
            throw std::invalid_argument(
                "DomainSpec: N must be a power of two >= 16, got " + std::to_string(N));
        if (M < 1)
            throw std::invalid_argument("DomainSpec: M must be positive");
        if (mode == Geometry::torus && M != 1)
            throw std::invalid_argument("DomainSpec: torus mode requires M = 1");
    }

    double length() const { return 2.0 * kPi * M; }
    double dx() const { return length() / N; }
    int nyquist() const { return N / 2; }
    int half_size() const { return N / 2 + 1; }  // stored coefficients j = 0..N/2

    double xi(int j) const { return static_cast<double>(j) / M; }
    double xi_max() const { return xi(nyquist()); }

    // 2/3-rule band: modes with j > dealias_cutoff() are zeroed by dealias().
    int dealias_cutoff() const { return N / 3; }
    double dealias_xi() const { return xi(dealias_cutoff()); }

    // grid point, wrapped representative in [-L/2, L/2) for line mode
    double x(int i) const { return i * dx(); }
    double x_centered(int i) const {
        double v = x(i);
        return v >= length() / 2 ? v - length() : v;
    }

    bool operator==(const DomainSpec&) const = default;
};

}  // namespace chlab

#endif
