#ifndef SYDLAB_SERIES_HPP
#define SYDLAB_SERIES_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <sydlab/rational.hpp>

namespace sydlab {

// Exact power series in x truncated after x^order.
class Series {
public:
    explicit Series(int order = 0);
    static Series one(int order);
    static Series monomial(int order, int exponent, const Rational& coeff = 1);
    static Series from_coefficients(std::vector<Rational> coeffs);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    // Throws std::out_of_range outside 0..order.
    const Rational& coefficient(int i) const;
    Rational& at(int i);
    const std::vector<Rational>& coefficients() const { return c_; }

    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    Series& operator*=(const Series& o);
    Series& operator*=(const Rational& s);
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(Series a, const Series& b) { return a *= b; }
    friend Series operator*(Series a, const Rational& s) { return a *= s; }
    friend Series operator*(const Rational& s, Series a) { return a *= s; }
    friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }

    // Throws std::domain_error("division by non-unit") if the constant term is 0.
    Series inverse() const;
    // x -> sign * x^power, truncated to the same order.
    Series substitute(int sign, int power) const;
    Series truncated(int order) const;

private:
    std::vector<Rational> c_;
};

// Exact power series in u, v truncated after u^nu and v^nv independently.
class Series2 {
public:
    Series2(int nu = 0, int nv = 0);
    static Series2 one(int nu, int nv);

    int order_u() const { return nu_; }
    int order_v() const { return nv_; }
    const Rational& coefficient(int i, int j) const;
    Rational& at(int i, int j);

    Series2& operator+=(const Series2& o);
    Series2& operator*=(const Series2& o);
    Series2& operator*=(const Rational& s);
    friend bool operator==(const Series2& a, const Series2& b) { return a.c_ == b.c_ && a.nu_ == b.nu_; }

private:
    int nu_;
    int nv_;
    std::vector<Rational> c_;
};

// Exponent a*k + b of a product index k.
struct Affine {
    int a = 0;
    int b = 0;
    int at(int k) const { return a * k + b; }
};

// prod over k in [k_from, k_to] of (1 + sign * u^{eu(k)} v^{ev(k)})^power;
// k_to absent means an infinite product.
struct Factor {
    Affine u;
    Affine v;
    int sign = 1;
    int power = 1;
    int k_from = 1;
    std::optional<int> k_to;
};

struct ProductSpec {
    std::vector<Factor> factors;
    int prefactor_u = 0;
    int prefactor_v = 0;
    Rational scalar = 1;

    ProductSpec& times(const Factor& f)
    {
        factors.push_back(f);
        return *this;
    }
    ProductSpec& scaled(const Rational& s, int monomial_u = 0, int monomial_v = 0)
    {
        scalar *= s;
        prefactor_u += monomial_u;
        prefactor_v += monomial_v;
        return *this;
    }
};

// prod_{k >= k_from} (1 + sign x^{a k + b})^power.
Factor product_factor(int sign, Affine exponent, int power = 1, int k_from = 1, std::optional<int> k_to = std::nullopt);
// (A; x^step)_count^power with A = a_sign * x^a_exp; count absent means infinite.
Factor pochhammer(int a_sign, int a_exp, int step, int power = 1, std::optional<int> count = std::nullopt);
// Same in two variables: A = a_sign u^au v^av, base u^su v^sv.
Factor pochhammer2(int a_sign, int au, int av, int su, int sv, int power = 1, std::optional<int> count = std::nullopt);

// Infinite products stop at the first index whose exponent exceeds the
// truncation order; every later factor is 1 modulo the truncation because
// exponents are nondecreasing in k. Throws std::invalid_argument for
// negative exponents or an infinite product of a constant factor, and
// std::domain_error("division by non-unit") for a zero constant factor
// raised to a negative power.
Series expand(const ProductSpec& spec, int order);
Series2 expand2(const ProductSpec& spec, int nu, int nv);

// First exponent where the two series differ, up to the smaller order.
std::optional<int> first_mismatch(const Series& a, const Series& b);

std::string to_string(const Series& s);

} // namespace sydlab

#endif
