#ifndef SYDLAB_ORBITS_HPP
#define SYDLAB_ORBITS_HPP

#include <vector>

#include <sydlab/diagram.hpp>
#include <sydlab/pair.hpp>

namespace sydlab {

// Orbit labels of nilpotent K-orbits for the pair. Order: underlying
// partition reverse-lexicographic, then the vector of + counts per length
// lexicographic, then decoration I before II. For PGL with p = q every
// diagram is identified with its sign swap and the smaller one is emitted.
std::vector<OrbitLabel> enumerate_syd(const SymmetricPair& pair);

// Diagram satisfies the sign and parity rules of the pair (ignores the
// PGL identification and decorations).
bool satisfies_type_rules(const SymmetricPair& pair, const SignedYoungDiagram& d);

// Very even: nonempty, every length even. Only meaningful for BDI.
bool is_very_even(const SignedYoungDiagram& d);

// Label is exactly one emitted by enumerate_syd(pair).
bool is_orbit_label(const SymmetricPair& pair, const OrbitLabel& label);

// Throws std::invalid_argument unless is_orbit_label holds.
void require_orbit_label(const SymmetricPair& pair, const OrbitLabel& label);

} // namespace sydlab

#endif
