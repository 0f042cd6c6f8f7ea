#include "liftsim/shared_prng.hpp"

namespace liftsim {

std::int32_t SharedPrng::next(int bits) noexcept {
    state_ = (state_ * kMultiplier + kIncrement) & kMask;
    return static_cast<std::int32_t>(static_cast<std::uint32_t>(state_ >> (48 - bits)));
}

std::int32_t SharedPrng::bounded(std::int32_t n) noexcept {
    if ((n & -n) == n) {
        return static_cast<std::int32_t>((static_cast<std::int64_t>(n) * next(31)) >> 31);
    }
    std::int32_t r = 0;
    std::int32_t candidate = 0;
    do {
        r = next(31);
        candidate = r % n;
        // Reject the partial block at the top of the 31-bit range; the sum
        // leaving [0, 2^31) is the overflow test done in 64-bit arithmetic.
    } while (std::int64_t{r} - candidate + (n - 1) > INT32_MAX);
    return candidate;
}

}  // namespace liftsim
