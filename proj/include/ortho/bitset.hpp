#ifndef ORTHO_BITSET_HPP
#define ORTHO_BITSET_HPP

#include <bit>
#include <cstdint>

namespace ortho {

// Subsets of an indexed carrier (lattice elements, space points) as 64-bit
// masks. All carriers in this library are capped at 64 entries.
using Mask = std::uint64_t;

constexpr int kMaxCarrier = 64;

constexpr Mask full_mask(int n) {
  return n >= kMaxCarrier ? ~Mask{0} : (Mask{1} << n) - 1;
}
constexpr Mask bit(int i) { return Mask{1} << i; }
constexpr bool has(Mask m, int i) { return (m >> i) & Mask{1}; }
constexpr bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }
inline int popcount(Mask m) { return std::popcount(m); }
inline int first_bit(Mask m) { return std::countr_zero(m); }  // m != 0

// Calls f(i) for every set bit of m, in increasing index order.
template <typename F>
void for_bits(Mask m, F&& f) {
  while (m != 0) {
    f(std::countr_zero(m));
    m &= m - 1;
  }
}

}  // namespace ortho

#endif  // ORTHO_BITSET_HPP
