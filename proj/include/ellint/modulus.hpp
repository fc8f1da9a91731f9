#pragma once

#include <stdexcept>
#include <string>

#include "real.hpp"

namespace ellint {

// Elliptic modulus r in (0,1) with its complement r' = sqrt(1-r^2) computed
// once at construction precision. x() = r^2 is the series variable used by
// every even expansion here.
class Modulus {
  public:
    explicit Modulus(Real r) : r_(std::move(r)), rp_(r_.prec()), x_(r_.prec()) {
        if (!(r_.sign() > 0) || !(r_ < 1))
            throw std::domain_error("modulus must lie in (0,1), got " + r_.str_digits(8));
        x_ = r_ * r_;
        rp_ = sqrt(1 - x_);
    }

    static Modulus from_decimal(const std::string& s, long prec) {
        return Modulus(Real::from_decimal(s, prec));
    }

    const Real& r() const { return r_; }
    const Real& rp() const { return rp_; }
    const Real& x() const { return x_; }
    long prec() const { return r_.prec(); }

    Modulus at_prec(long prec) const {
        // Re-deriving rp/x from the rounded r keeps the (r, rp) pair coherent
        // at the new precision instead of carrying the old rounding.
        return Modulus(r_.rounded_to(prec));
    }

  private:
    Real r_;
    Real rp_;
    Real x_;
};

}  // namespace ellint
