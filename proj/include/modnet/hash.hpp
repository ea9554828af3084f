#pragma once

#include <bit>
#include <cstdint>

namespace modnet {

/// FNV-1a over binary64 payloads. Doubles are fed as their IEEE754 bits,
/// least significant byte first, so the hash is endianness-independent.
class PayloadHasher {
public:
    void add(double v) { add_u64(std::bit_cast<std::uint64_t>(v)); }

    void add_u64(std::uint64_t bits) {
        for (int i = 0; i < 8; ++i) {
            h_ ^= (bits >> (8 * i)) & 0xFF;
            h_ *= 0x100000001B3ULL;
        }
    }

    std::uint64_t value() const { return h_; }

private:
    std::uint64_t h_ = 0xCBF29CE484222325ULL;
};

}  // namespace modnet
