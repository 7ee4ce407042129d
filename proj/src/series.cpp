#include <sydlab/series.hpp>

#include <algorithm>
#include <stdexcept>

namespace sydlab {

Series::Series(int order)
{
    if (order < 0)
        throw std::invalid_argument("series order must be nonnegative");
    c_.assign(order + 1, Rational(0));
}

Series Series::one(int order)
{
    Series s(order);
    s.c_[0] = 1;
    return s;
}

Series Series::monomial(int order, int exponent, const Rational& coeff)
{
    Series s(order);
    if (exponent < 0)
        throw std::invalid_argument("negative exponent");
    if (exponent <= order)
        s.c_[exponent] = coeff;
    return s;
}

Series Series::from_coefficients(std::vector<Rational> coeffs)
{
    if (coeffs.empty())
        throw std::invalid_argument("series needs at least one coefficient");
    Series s(0);
    s.c_ = std::move(coeffs);
    return s;
}

const Rational& Series::coefficient(int i) const
{
    if (i < 0 || i > order())
        throw std::out_of_range("coefficient x^" + std::to_string(i) + " beyond truncation order " + std::to_string(order()));
    return c_[i];
}

Rational& Series::at(int i)
{
    if (i < 0 || i > order())
        throw std::out_of_range("coefficient x^" + std::to_string(i) + " beyond truncation order " + std::to_string(order()));
    return c_[i];
}

Series& Series::operator+=(const Series& o)
{
    c_.resize(std::min(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < c_.size(); ++i)
        c_[i] += o.c_[i];
    return *this;
}

Series& Series::operator-=(const Series& o)
{
    c_.resize(std::min(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < c_.size(); ++i)
        c_[i] -= o.c_[i];
    return *this;
}

Series& Series::operator*=(const Series& o)
{
    int n = std::min(order(), o.order());
    std::vector<Rational> r(n + 1, Rational(0));
    for (int i = 0; i <= n; ++i) {
        if (c_[i] == 0)
            continue;
        for (int j = 0; i + j <= n; ++j)
            if (o.c_[j] != 0)
                r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    return *this;
}

Series& Series::operator*=(const Rational& s)
{
    for (auto& x : c_)
        x *= s;
    return *this;
}

Series Series::inverse() const
{
    if (c_[0] == 0)
        throw std::domain_error("division by non-unit");
    Series r(order());
    Rational inv0 = 1 / c_[0];
    r.c_[0] = inv0;
    for (int n = 1; n <= order(); ++n) {
        Rational acc = 0;
        for (int k = 1; k <= n; ++k)
            if (c_[k] != 0)
                acc += c_[k] * r.c_[n - k];
        r.c_[n] = -acc * inv0;
    }
    return r;
}

Series Series::substitute(int sign, int power) const
{
    if (power < 1 || (sign != 1 && sign != -1))
        throw std::invalid_argument("substitute: need sign +-1 and power >= 1");
    Series r(order());
    for (int i = 0; i * power <= order(); ++i)
        r.c_[i * power] = (sign == -1 && i % 2 == 1) ? Rational(-c_[i]) : c_[i];
    return r;
}

Series Series::truncated(int new_order) const
{
    if (new_order > order())
        throw std::out_of_range("cannot extend a truncated series");
    std::vector<Rational> c(c_.begin(), c_.begin() + new_order + 1);
    return from_coefficients(std::move(c));
}

Series2::Series2(int nu, int nv)
    : nu_(nu)
    , nv_(nv)
{
    if (nu < 0 || nv < 0)
        throw std::invalid_argument("series order must be nonnegative");
    c_.assign(static_cast<std::size_t>(nu + 1) * (nv + 1), Rational(0));
}

Series2 Series2::one(int nu, int nv)
{
    Series2 s(nu, nv);
    s.c_[0] = 1;
    return s;
}

const Rational& Series2::coefficient(int i, int j) const
{
    if (i < 0 || j < 0 || i > nu_ || j > nv_)
        throw std::out_of_range("coefficient u^" + std::to_string(i) + " v^" + std::to_string(j) + " beyond truncation order");
    return c_[static_cast<std::size_t>(i) * (nv_ + 1) + j];
}

Rational& Series2::at(int i, int j)
{
    if (i < 0 || j < 0 || i > nu_ || j > nv_)
        throw std::out_of_range("coefficient u^" + std::to_string(i) + " v^" + std::to_string(j) + " beyond truncation order");
    return c_[static_cast<std::size_t>(i) * (nv_ + 1) + j];
}

Series2& Series2::operator+=(const Series2& o)
{
    if (nu_ != o.nu_ || nv_ != o.nv_)
        throw std::invalid_argument("bivariate orders differ");
    for (std::size_t i = 0; i < c_.size(); ++i)
        c_[i] += o.c_[i];
    return *this;
}

Series2& Series2::operator*=(const Series2& o)
{
    if (nu_ != o.nu_ || nv_ != o.nv_)
        throw std::invalid_argument("bivariate orders differ");
    Series2 r(nu_, nv_);
    for (int i = 0; i <= nu_; ++i)
        for (int j = 0; j <= nv_; ++j) {
            const Rational& a = coefficient(i, j);
            if (a == 0)
                continue;
            for (int k = 0; i + k <= nu_; ++k)
                for (int l = 0; j + l <= nv_; ++l) {
                    const Rational& b = o.coefficient(k, l);
                    if (b != 0)
                        r.at(i + k, j + l) += a * b;
                }
        }
    *this = std::move(r);
    return *this;
}

Series2& Series2::operator*=(const Rational& s)
{
    for (auto& x : c_)
        x *= s;
    return *this;
}

Factor product_factor(int sign, Affine exponent, int power, int k_from, std::optional<int> k_to)
{
    Factor f;
    f.u = exponent;
    f.sign = sign;
    f.power = power;
    f.k_from = k_from;
    f.k_to = k_to;
    return f;
}

Factor pochhammer(int a_sign, int a_exp, int step, int power, std::optional<int> count)
{
    return pochhammer2(a_sign, a_exp, 0, step, 0, power, count);
}

Factor pochhammer2(int a_sign, int au, int av, int su, int sv, int power, std::optional<int> count)
{
    Factor f;
    f.u = {su, au};
    f.v = {sv, av};
    f.sign = -a_sign;
    f.power = power;
    f.k_from = 0;
    if (count)
        f.k_to = *count - 1;
    return f;
}

namespace {

void check_factor(const Factor& f)
{
    if (f.sign != 1 && f.sign != -1)
        throw std::invalid_argument("factor sign must be +-1");
    if (f.u.a < 0 || f.v.a < 0)
        throw std::invalid_argument("factor exponents must be nondecreasing in the product index");
    if (!f.k_to && f.u.a == 0 && f.v.a == 0)
        throw std::invalid_argument("infinite product of a constant factor");
}

// Multiplies c (laid out as (nu+1) x (nv+1)) by (1 + sign u^eu v^ev)^power.
void apply(std::vector<Rational>& c, int nu, int nv, int eu, int ev, int sign, int power)
{
    if (eu < 0 || ev < 0)
        throw std::invalid_argument("negative exponent in product factor");
    auto idx = [nv](int i, int j) { return static_cast<std::size_t>(i) * (nv + 1) + j; };
    if (eu == 0 && ev == 0) {
        if (sign == -1) {
            if (power < 0)
                throw std::domain_error("division by non-unit");
            if (power > 0)
                for (auto& x : c)
                    x = 0;
            return;
        }
        Rational s = 1;
        for (int i = 0; i < (power < 0 ? -power : power); ++i)
            s *= 2;
        if (power < 0)
            s = 1 / s;
        for (auto& x : c)
            x *= s;
        return;
    }
    if (eu > nu || ev > nv)
        return;
    if (power > 0) {
        for (int t = 0; t < power; ++t)
            for (int i = nu; i >= eu; --i)
                for (int j = nv; j >= ev; --j)
                    if (c[idx(i - eu, j - ev)] != 0) {
                        if (sign > 0)
                            c[idx(i, j)] += c[idx(i - eu, j - ev)];
                        else
                            c[idx(i, j)] -= c[idx(i - eu, j - ev)];
                    }
    } else {
        // 1/(1 + s m) = sum (-s m)^t, applied in place in increasing degree.
        for (int t = 0; t < -power; ++t)
            for (int i = eu; i <= nu; ++i)
                for (int j = ev; j <= nv; ++j)
                    if (c[idx(i - eu, j - ev)] != 0) {
                        if (sign > 0)
                            c[idx(i, j)] -= c[idx(i - eu, j - ev)];
                        else
                            c[idx(i, j)] += c[idx(i - eu, j - ev)];
                    }
    }
}

std::vector<Rational> expand_raw(const ProductSpec& spec, int nu, int nv)
{
    std::vector<Rational> c(static_cast<std::size_t>(nu + 1) * (nv + 1), Rational(0));
    if (spec.prefactor_u < 0 || spec.prefactor_v < 0)
        throw std::invalid_argument("negative prefactor exponent");
    if (spec.prefactor_u <= nu && spec.prefactor_v <= nv)
        c[static_cast<std::size_t>(spec.prefactor_u) * (nv + 1) + spec.prefactor_v] = spec.scalar;
    for (const Factor& f : spec.factors) {
        check_factor(f);
        for (int k = f.k_from;; ++k) {
            if (f.k_to && k > *f.k_to)
                break;
            int eu = f.u.at(k);
            int ev = f.v.at(k);
            if (!f.k_to && ((f.u.a > 0 && eu > nu) || (f.v.a > 0 && ev > nv)))
                break;
            apply(c, nu, nv, eu, ev, f.sign, f.power);
        }
    }
    return c;
}

} // namespace

Series expand(const ProductSpec& spec, int order)
{
    for (const Factor& f : spec.factors)
        if (f.v.a != 0 || f.v.b != 0)
            throw std::invalid_argument("bivariate factor in a univariate expansion");
    if (spec.prefactor_v != 0)
        throw std::invalid_argument("bivariate prefactor in a univariate expansion");
    return Series::from_coefficients(expand_raw(spec, order, 0));
}

Series2 expand2(const ProductSpec& spec, int nu, int nv)
{
    auto raw = expand_raw(spec, nu, nv);
    Series2 s(nu, nv);
    for (int i = 0; i <= nu; ++i)
        for (int j = 0; j <= nv; ++j)
            s.at(i, j) = raw[static_cast<std::size_t>(i) * (nv + 1) + j];
    return s;
}

std::optional<int> first_mismatch(const Series& a, const Series& b)
{
    int n = std::min(a.order(), b.order());
    for (int i = 0; i <= n; ++i)
        if (a.coefficient(i) != b.coefficient(i))
            return i;
    return std::nullopt;
}

std::string to_string(const Series& s)
{
    std::string out;
    for (int i = 0; i <= s.order(); ++i) {
        if (i)
            out += " ";
        out += sydlab::to_string(s.coefficient(i));
    }
    return out;
}

} // namespace sydlab
