#pragma once

// Exact rational checks of the non-congruence identities: the reciprocal
// binomial-sum identity, the fractional-binomial product forms of the four
// summand families, and the shift recurrences of S_n(x) and T_n(x).

#include <cstdint>
#include <vector>

#include "supercong/modring.hpp"
#include "supercong/sums.hpp"

namespace supercong {

BigInt binomial_exact(std::uint64_t n, std::uint64_t k);

/// binom(a, k) = a(a-1)...(a-k+1)/k! for rational a.
Rational fractional_binomial(const Rational& a, std::uint64_t k);

/// Polynomial over Q, coefficient i multiplies x^i. The zero polynomial has
/// no coefficients; otherwise the leading coefficient is nonzero.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coeffs);
    static RatPoly constant(const Rational& c);
    /// s*x + c
    static RatPoly linear(const Rational& s, const Rational& c);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
    Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

    RatPoly operator+(const RatPoly& rhs) const;
    RatPoly operator-(const RatPoly& rhs) const;
    RatPoly operator*(const RatPoly& rhs) const;
    RatPoly operator*(const Rational& s) const;
    bool operator==(const RatPoly& rhs) const { return coeffs_ == rhs.coeffs_; }

    Rational evaluate(const Rational& x) const;
    /// q(x) = p(x + c)
    RatPoly shifted(const Rational& c) const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// binom(arg(x), k) as a polynomial in x.
RatPoly binomial_poly(const RatPoly& arg, std::uint64_t k);

struct IdentityCheck {
    bool holds;
    Rational lhs;
    Rational rhs;
};

/// sum_{k=0}^{n-1} 1/binom(n-1,k)^2 against (2n^2/(n+1)) sum_{k=1}^n 1/(k binom(2n+1-k, n-k)).
IdentityCheck check_swz_identity(std::uint64_t n);

/// The a with binom(a,k) binom(-1-a,k) equal to the family's summand.
Rational family_parameter(Family f);

/// Exact closed-form summand binom(..)binom(..)/base^k.
Rational family_summand(Family f, std::uint64_t k);

/// binom(a,k)binom(-1-a,k) equals the family summand for every k <= k_max.
bool check_fractional_binomial(Family f, std::uint64_t k_max);

struct SeriesPolys {
    RatPoly S;  // sum_{k<=n} binom(x,k) binom(-1-x,k)
    RatPoly T;  // sum_{k<=n} binom(x,k) binom(-1-x,k) (1+2x)/(1+2k)
};

SeriesPolys build_S_T(std::uint64_t n);

struct RecurrenceCheck {
    bool s_recurrence;  // S_n(x) + S_n(x+1) = 2 binom(x,n) binom(-2-x,n)
    bool t_recurrence;  // T_n(x) - T_n(x-1) = 2 binom(x-1,n) binom(-x-1,n)
    bool holds() const noexcept { return s_recurrence && t_recurrence; }
};

RecurrenceCheck check_recurrences(std::uint64_t n);

}  // namespace supercong
