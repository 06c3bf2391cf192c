#ifndef POWERGRAPH_POWER_HPP
#define POWERGRAPH_POWER_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace powergraph {

using label_t = std::uint64_t;

// Largest admissible vertex label. 64-bit arithmetic covers everything the
// library computes from labels, so no bignum type is needed below this cap.
inline constexpr label_t kDefaultLabelCap = label_t{1} << 40;

/// q(i): the largest power of two dividing i.
inline label_t q(label_t i) {
    if (i == 0) throw std::invalid_argument("q is undefined for 0");
    return i & (~i + 1);
}

/// Exponent k such that q(i) = 2^k.
inline unsigned power_exponent(label_t i) {
    if (i == 0) throw std::invalid_argument("power_exponent is undefined for 0");
    return static_cast<unsigned>(std::countr_zero(i));
}

inline bool is_power_of_two(label_t x) { return x != 0 && (x & (x - 1)) == 0; }

} // namespace powergraph

#endif
