#pragma once

#include <compare>
#include <gmpxx.h>
#include <string>
#include <string_view>

namespace ncs {

using Integer = mpz_class;
using Rational = mpq_class;

/// Element of the Gaussian rationals Q(i).
///
/// Both parts are kept canonical (lowest terms, positive denominator), so
/// structural equality is field equality.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re, Rational im = 0);

    static GaussianRational i() { return {0, 1}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    /// |z|^2, always a nonnegative rational.
    Rational norm() const { return re_ * re_ + im_ * im_; }
    GaussianRational inverse() const;

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    GaussianRational operator-() const { return {-re_, -im_}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    /// Lexicographic on (re, im); only used for deterministic orderings.
    friend std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b);

    /// "3/5", "-1", "2+1/3i", "-i". Inverse of parse().
    std::string to_string() const;
    static GaussianRational parse(std::string_view text);

private:
    Rational re_{0};
    Rational im_{0};
};

/// Parse "p/q" or "p" into a canonical rational; throws std::invalid_argument.
Rational parse_rational(std::string_view text);

}  // namespace ncs
