#ifndef SYDLAB_COUNT_MODE_HPP
#define SYDLAB_COUNT_MODE_HPP

namespace sydlab {

// Rank-0 bookkeeping. Enumeration counts the trivial pair as one object;
// Formula uses the 1/2 conventions that the product formulas consume.
enum class CountMode { Enumeration, Formula };

} // namespace sydlab

#endif
