#include "supercong/identities.hpp"

#include <stdexcept>
#include <utility>

namespace supercong {

BigInt binomial_exact(std::uint64_t n, std::uint64_t k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Rational fractional_binomial(const Rational& a, std::uint64_t k) {
    Rational r = 1;
    for (std::uint64_t j = 0; j < k; ++j) {
        r *= (a - Rational(static_cast<unsigned long>(j)));
        r /= Rational(static_cast<unsigned long>(j + 1));
    }
    return r;
}

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
}

RatPoly RatPoly::constant(const Rational& c) { return RatPoly({c}); }

RatPoly RatPoly::linear(const Rational& s, const Rational& c) { return RatPoly({c, s}); }

void RatPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RatPoly RatPoly::operator+(const RatPoly& rhs) const {
    std::vector<Rational> out(std::max(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) + rhs.coeff(i);
    return RatPoly(std::move(out));
}

RatPoly RatPoly::operator-(const RatPoly& rhs) const {
    std::vector<Rational> out(std::max(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) - rhs.coeff(i);
    return RatPoly(std::move(out));
}

RatPoly RatPoly::operator*(const RatPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return {};
    std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return RatPoly(std::move(out));
}

RatPoly RatPoly::operator*(const Rational& s) const {
    std::vector<Rational> out = coeffs_;
    for (auto& c : out) c *= s;
    return RatPoly(std::move(out));
}

Rational RatPoly::evaluate(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RatPoly RatPoly::shifted(const Rational& c) const {
    const RatPoly step = linear(1, c);
    RatPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * step + constant(*it);
    return acc;
}

RatPoly binomial_poly(const RatPoly& arg, std::uint64_t k) {
    RatPoly out = RatPoly::constant(1);
    for (std::uint64_t j = 0; j < k; ++j) {
        out = out * (arg - RatPoly::constant(Rational(static_cast<unsigned long>(j))));
        out = out * Rational(1, static_cast<unsigned long>(j + 1));
    }
    return out;
}

IdentityCheck check_swz_identity(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("check_swz_identity: n must be positive");
    Rational lhs = 0;
    for (std::uint64_t k = 0; k < n; ++k) {
        BigInt b = binomial_exact(n - 1, k);
        lhs += Rational(BigInt(1), b * b);
    }
    Rational inner = 0;
    for (std::uint64_t k = 1; k <= n; ++k) {
        inner += Rational(BigInt(1), BigInt(static_cast<unsigned long>(k)) * binomial_exact(2 * n + 1 - k, n - k));
    }
    BigInt nn(static_cast<unsigned long>(n));
    Rational factor(2 * nn * nn, nn + 1);
    factor.canonicalize();
    Rational rhs = factor * inner;
    lhs.canonicalize();
    rhs.canonicalize();
    return {lhs == rhs, lhs, rhs};
}

Rational family_parameter(Family f) {
    switch (f) {
        case Family::CentralSquared: return Rational(-1, 2);
        case Family::TwoThree: return Rational(-1, 3);
        case Family::FourTwo: return Rational(-1, 4);
        case Family::SixThree: return Rational(-1, 6);
    }
    throw std::logic_error("unknown family");
}

Rational family_summand(Family f, std::uint64_t k) {
    BigInt num;
    switch (f) {
        case Family::CentralSquared: {
            BigInt c = binomial_exact(2 * k, k);
            num = c * c;
            break;
        }
        case Family::TwoThree: num = binomial_exact(2 * k, k) * binomial_exact(3 * k, k); break;
        case Family::FourTwo: num = binomial_exact(4 * k, 2 * k) * binomial_exact(2 * k, k); break;
        case Family::SixThree: num = binomial_exact(6 * k, 3 * k) * binomial_exact(3 * k, k); break;
    }
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), family_base(f), k);
    Rational r(num, den);
    r.canonicalize();
    return r;
}

bool check_fractional_binomial(Family f, std::uint64_t k_max) {
    const Rational a = family_parameter(f);
    const Rational b = Rational(-1) - a;
    for (std::uint64_t k = 0; k <= k_max; ++k) {
        if (fractional_binomial(a, k) * fractional_binomial(b, k) != family_summand(f, k)) return false;
    }
    return true;
}

SeriesPolys build_S_T(std::uint64_t n) {
    const RatPoly x = RatPoly::linear(1, 0);
    const RatPoly minus_one_minus_x = RatPoly::linear(-1, -1);
    RatPoly term = RatPoly::constant(1);  // binom(x,k) binom(-1-x,k)
    RatPoly s = term;
    RatPoly t_inner = term;                // sum term_k / (1+2k)
    for (std::uint64_t k = 1; k <= n; ++k) {
        Rational j(static_cast<unsigned long>(k - 1));
        term = term * (x - RatPoly::constant(j)) * (minus_one_minus_x - RatPoly::constant(j)) *
               Rational(1, static_cast<unsigned long>(k * k));
        s = s + term;
        t_inner = t_inner + term * Rational(1, static_cast<unsigned long>(2 * k + 1));
    }
    return {s, t_inner * RatPoly::linear(2, 1)};
}

RecurrenceCheck check_recurrences(std::uint64_t n) {
    const auto [S, T] = build_S_T(n);
    const RatPoly rhs_s = binomial_poly(RatPoly::linear(1, 0), n) * binomial_poly(RatPoly::linear(-1, -2), n) *
                          Rational(2);
    const RatPoly rhs_t = binomial_poly(RatPoly::linear(1, -1), n) * binomial_poly(RatPoly::linear(-1, -1), n) *
                          Rational(2);
    return {S + S.shifted(1) == rhs_s, T - T.shifted(-1) == rhs_t};
}

}  // namespace supercong
