#ifndef SYDLAB_GENERATING_HPP
#define SYDLAB_GENERATING_HPP

#include <sydlab/series.hpp>

namespace sydlab::gf {

// prod (1+x^{2s})(1+x^s): simple modules with parameters (-1,-1).
ProductSpec hecke_d();
// prod (1+x^{2s-1})(1+x^s): simple modules with parameters (-1,1).
ProductSpec hecke_e();
// prod (1+x^s)/(1-x^s): Richardson orbits of the split symplectic pair.
ProductSpec richardson_c();
// prod (1+x^s)^3/(1-x^s)^2: orbital complexes of the split symplectic pair.
ProductSpec orbital_c();
// prod (1+x^{2k})^2 (1+x^k)^2.
ProductSpec full_support_b();
// 1/2 prod (1+x^{2k-1})^2 (1+x^k)^2.
ProductSpec full_support_d();
// 2x prod (1+x^{4k})^2 (1+x^{2k})^2.
ProductSpec biorbital_b();
// 1/2 prod (1+x^{4k-2})^2 (1+x^{2k})^2.
ProductSpec biorbital_d();
// prod 1/(1-x^s).
ProductSpec partitions();
// prod 1/(1-x^{2s}).
ProductSpec partitions_even();
// prod_{k>=1} 1/(1-u^{2k}v^{2k}) prod_{m>=0} (1+u^{m+1}v^m)(1+u^m v^{m+1}) / ((1-u^{m+1}v^m)(1-u^m v^{m+1})).
ProductSpec wt_bivariate();
// 2/(1+x^k) prod (1+x^m)/(1-x^m)^3: diagonal wt(p+k,p).
ProductSpec wt_diagonal(int k);
// prod (1+x^{2m-1})^2/(1-x^{2m-1})^2.
ProductSpec f_odd_parts();
// 8x prod (1+x^{4k})^4 (1+x^{2k})^4.
ProductSpec f_odd_side();
// 2 prod (1+x^{4k-2})^4 (1+x^{2k})^4.
ProductSpec f_even_side();

} // namespace sydlab::gf

#endif
