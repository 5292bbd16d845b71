#ifndef CHLAB_FIELD_HPP
#define CHLAB_FIELD_HPP

#include <complex>
#include <stdexcept>
#include <vector>

#include "chlab/domain.hpp"

namespace chlab {

using cdouble = std::complex<double>;

/* Real-valued periodic field stored as the non-negative half of its Fourier
 * coefficients: u(x) = sum_{|j|<=N/2} c_j e^{i xi_j x} with c_{-j} = conj(c_j).
 * The Hermitian half is implicit, so realness is structural; the remaining
 * representation invariants are a real mean mode and a zero Nyquist mode. */
class SpectralField {
  public:
    SpectralField() = default;
    explicit SpectralField(const DomainSpec& dom)
        : dom_(dom), c_(static_cast<size_t>(dom.half_size()), cdouble{0.0, 0.0}) {}

    SpectralField(const DomainSpec& dom, std::vector<cdouble> coeffs)
        : dom_(dom), c_(std::move(coeffs)) {
        if (c_.size() != static_cast<size_t>(dom_.half_size()))
            throw std::invalid_argument("SpectralField: coefficient count != N/2+1");
        enforce_invariants();
    }

    const DomainSpec& domain() const { return dom_; }
    int half_size() const { return static_cast<int>(c_.size()); }

    cdouble& operator[](int j) { return c_[static_cast<size_t>(j)]; }
    const cdouble& operator[](int j) const { return c_[static_cast<size_t>(j)]; }

    // coefficient at signed lattice index
    cdouble at(int j) const {
        if (j >= 0) return c_[static_cast<size_t>(j)];
        return std::conj(c_[static_cast<size_t>(-j)]);
    }

    std::vector<cdouble>& coeffs() { return c_; }
    const std::vector<cdouble>& coeffs() const { return c_; }

    // mean mode real, Nyquist pinned to zero
    void enforce_invariants() {
        if (!c_.empty()) {
            c_.front() = cdouble{c_.front().real(), 0.0};
            c_.back() = cdouble{0.0, 0.0};
        }
    }

    bool invariants_ok(double tol = 0.0) const {
        if (c_.empty()) return false;
        return std::abs(c_.front().imag()) <= tol && std::abs(c_.back()) <= tol;
    }

    SpectralField& operator+=(const SpectralField& o) {
        require_same_domain(o);
        for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    SpectralField& operator-=(const SpectralField& o) {
        require_same_domain(o);
        for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    SpectralField& operator*=(double s) {
        for (auto& v : c_) v *= s;
        return *this;
    }

    friend SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
    friend SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
    friend SpectralField operator*(double s, SpectralField a) { return a *= s; }
    friend SpectralField operator*(SpectralField a, double s) { return a *= s; }

  private:
    void require_same_domain(const SpectralField& o) const {
        if (!(dom_ == o.dom_))
            throw std::invalid_argument("SpectralField: domain mismatch");
    }

    DomainSpec dom_;
    std::vector<cdouble> c_;
};

}  // namespace chlab

#endif
