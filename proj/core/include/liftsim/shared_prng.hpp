#pragma once

#include <cstdint>

namespace liftsim {

// 48-bit linear congruential generator with the same recurrence, seeding and
// bounded draw as java.util.Random. Every correct node that seeds it with the
// same value sees the same stream, which is what lets nodes agree on new hubs
// without exchanging messages.
class SharedPrng {
public:
    static constexpr std::uint64_t kMultiplier = 0x5DEECE66DULL;  // 25214903917
    static constexpr std::uint64_t kIncrement = 0xBULL;
    static constexpr std::uint64_t kMask = (std::uint64_t{1} << 48) - 1;

    explicit SharedPrng(std::int64_t seed) noexcept
        : state_((static_cast<std::uint64_t>(seed) ^ kMultiplier) & kMask) {}

    // Advances the state and returns its top `bits` bits (1..32), as a
    // signed 32-bit value.
    std::int32_t next(int bits) noexcept;

    // Unbiased draw in [0, n). n must be positive.
    std::int32_t bounded(std::int32_t n) noexcept;

    std::uint64_t state() const noexcept { return state_; }

private:
    std::uint64_t state_;
};

}  // namespace liftsim
