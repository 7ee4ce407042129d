#include <sydlab/generating.hpp>

namespace sydlab::gf {

ProductSpec hecke_d()
{
    return ProductSpec{}.times(product_factor(1, {2, 0})).times(product_factor(1, {1, 0}));
}

ProductSpec hecke_e()
{
    return ProductSpec{}.times(product_factor(1, {2, -1})).times(product_factor(1, {1, 0}));
}

ProductSpec richardson_c()
{
    return ProductSpec{}.times(product_factor(1, {1, 0})).times(product_factor(-1, {1, 0}, -1));
}

ProductSpec orbital_c()
{
    return ProductSpec{}.times(product_factor(1, {1, 0}, 3)).times(product_factor(-1, {1, 0}, -2));
}

ProductSpec full_support_b()
{
    return ProductSpec{}.times(product_factor(1, {2, 0}, 2)).times(product_factor(1, {1, 0}, 2));
}

ProductSpec full_support_d()
{
    return ProductSpec{}
        .times(product_factor(1, {2, -1}, 2))
        .times(product_factor(1, {1, 0}, 2))
        .scaled(rational(1, 2));
}

ProductSpec biorbital_b()
{
    return ProductSpec{}
        .times(product_factor(1, {4, 0}, 2))
        .times(product_factor(1, {2, 0}, 2))
        .scaled(2, 1);
}

ProductSpec biorbital_d()
{
    return ProductSpec{}
        .times(product_factor(1, {4, -2}, 2))
        .times(product_factor(1, {2, 0}, 2))
        .scaled(rational(1, 2));
}

ProductSpec partitions()
{
    return ProductSpec{}.times(product_factor(-1, {1, 0}, -1));
}

ProductSpec partitions_even()
{
    return ProductSpec{}.times(product_factor(-1, {2, 0}, -1));
}

ProductSpec wt_bivariate()
{
    ProductSpec s;
    Factor diag;
    diag.u = {2, 0};
    diag.v = {2, 0};
    diag.sign = -1;
    diag.power = -1;
    s.times(diag);
    for (int sign : {1, -1}) {
        int power = sign == 1 ? 1 : -1;
        Factor a;
        a.u = {1, 1};
        a.v = {1, 0};
        a.sign = sign;
        a.power = power;
        a.k_from = 0;
        Factor b = a;
        b.u = {1, 0};
        b.v = {1, 1};
        s.times(a).times(b);
    }
    return s;
}

ProductSpec wt_diagonal(int k)
{
    return ProductSpec{}
        .times(product_factor(1, {0, k}, -1, 0, 0))
        .times(product_factor(1, {1, 0}))
        .times(product_factor(-1, {1, 0}, -3))
        .scaled(2);
}

ProductSpec f_odd_parts()
{
    return ProductSpec{}.times(product_factor(1, {2, -1}, 2)).times(product_factor(-1, {2, -1}, -2));
}

ProductSpec f_odd_side()
{
    return ProductSpec{}
        .times(product_factor(1, {4, 0}, 4))
        .times(product_factor(1, {2, 0}, 4))
        .scaled(8, 1);
}

ProductSpec f_even_side()
{
    return ProductSpec{}
        .times(product_factor(1, {4, -2}, 4))
        .times(product_factor(1, {2, 0}, 4))
        .scaled(2);
}

} // namespace sydlab::gf
