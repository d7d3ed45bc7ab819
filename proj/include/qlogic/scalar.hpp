#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "qlogic/errors.hpp"

namespace qlogic {

/// Exact element of the field Q(sqrt m) + i*Q(sqrt m) for a fixed square-free
/// radicand m >= 1. The value is
///
///     (re_rat + re_irr*sqrt(m)) + i*(im_rat + im_irr*sqrt(m)),
///
/// all four components arbitrary-precision rationals. Representation is
/// unique: m == 1 folds the irrational parts into the rational ones, and a
/// value with zero irrational parts normalizes its radicand to 1, so scalars
/// from different workspaces mix exactly when at least one is plain rational.
/// Every operation is exact; equality is structural with no tolerance.
class Scalar {
  public:
    Scalar() = default;
    Scalar(long v) : re_rat_(v) {} // NOLINT(google-explicit-constructor)
    explicit Scalar(mpq_class v) : re_rat_(std::move(v)) { re_rat_.canonicalize(); }

    static Scalar rational(mpq_class re, mpq_class im = 0);
    static Scalar of(mpq_class re_rat, mpq_class re_irr, mpq_class im_rat, mpq_class im_irr,
                     long radicand);
    /// sqrt(m) as a field element.
    static Scalar sqrt_radicand(long radicand);
    static Scalar imaginary_unit();

    const mpq_class& re_rat() const { return re_rat_; }
    const mpq_class& re_irr() const { return re_irr_; }
    const mpq_class& im_rat() const { return im_rat_; }
    const mpq_class& im_irr() const { return im_irr_; }
    long radicand() const { return radicand_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_real() const { return im_rat_ == 0 && im_irr_ == 0; }
    bool is_rational() const { return re_irr_ == 0 && im_rat_ == 0 && im_irr_ == 0 && is_real(); }

    Scalar conj() const;
    /// Multiplicative inverse; throws FieldError on zero.
    Scalar inverse() const;
    /// |z|^2 as a real field element.
    Scalar norm_sq() const;
    /// Sign of a real element (-1, 0, +1); throws PreconditionError if not real.
    int real_sign() const;
    /// The rational value of a rational element; throws if not rational.
    const mpq_class& as_rational() const;

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

    bool operator==(const Scalar& other) const = default;

    /// Canonical literal, e.g. "0", "-1/2+1/2*r*i", "r", "2-3*i".
    std::string str() const;
    /// Parse the literal grammar: signed terms of the form R, R*r, R*i, R*r*i
    /// with R a decimal rational; bare r/i allowed; whitespace-insensitive.
    static Scalar parse(std::string_view text, long radicand);

  private:
    mpq_class re_rat_{0}, re_irr_{0}, im_rat_{0}, im_irr_{0};
    long radicand_ = 1;

    void normalize();
    static long unify_radicand(const Scalar& a, const Scalar& b);
};

/// Radicand both operands can live in; throws FieldError when incompatible.
long unify_radicands(long a, long b);

} // namespace qlogic
