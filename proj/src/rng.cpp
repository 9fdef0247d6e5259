// SPDX-License-Identifier: Apache-2.0
#include "qce/rng.hpp"

#include <cmath>
#include <numbers>

#include "qce/error.hpp"

namespace qce {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

inline void mul_hi_lo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
    const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(p >> 32);
    lo = static_cast<std::uint32_t>(p);
}

} // namespace

std::array<std::uint32_t, 4> philox4x32(const std::array<std::uint32_t, 4>& counter,
                                        const std::array<std::uint32_t, 2>& key) {
    std::array<std::uint32_t, 4> c = counter;
    std::uint32_t k0 = key[0];
    std::uint32_t k1 = key[1];
    for (int round = 0; round < 10; ++round) {
        std::uint32_t hi0, lo0, hi1, lo1;
        mul_hi_lo(kPhiloxM0, c[0], hi0, lo0);
        mul_hi_lo(kPhiloxM1, c[2], hi1, lo1);
        c = {hi1 ^ c[1] ^ k0, lo1, hi0 ^ c[3] ^ k1, lo0};
        k0 += kPhiloxW0;
        k1 += kPhiloxW1;
    }
    return c;
}

RandomStream::RandomStream(std::uint64_t master_seed, std::uint64_t stream_id)
    : master_seed_(master_seed), stream_id_(stream_id) {}

void RandomStream::refill() {
    const std::array<std::uint32_t, 4> counter = {
        static_cast<std::uint32_t>(block_),
        static_cast<std::uint32_t>(block_ >> 32),
        static_cast<std::uint32_t>(stream_id_),
        static_cast<std::uint32_t>(stream_id_ >> 32),
    };
    const std::array<std::uint32_t, 2> key = {
        static_cast<std::uint32_t>(master_seed_),
        static_cast<std::uint32_t>(master_seed_ >> 32),
    };
    buffer_ = philox4x32(counter, key);
    ++block_;
    buffer_pos_ = 0;
}

std::uint32_t RandomStream::next_u32() {
    if (buffer_pos_ >= 4) refill();
    return buffer_[static_cast<std::size_t>(buffer_pos_++)];
}

std::uint64_t RandomStream::next_u64() {
    const std::uint64_t lo = next_u32();
    const std::uint64_t hi = next_u32();
    return (hi << 32) | lo;
}

double RandomStream::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomStream::next_double_open() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double RandomStream::next_uniform(double lo, double hi) {
    return lo + (hi - lo) * next_double();
}

std::uint32_t RandomStream::next_index(std::uint32_t n) {
    auto idx = static_cast<std::uint32_t>(next_double() * n);
    return idx < n ? idx : n - 1;
}

Complex RandomStream::next_cn(double variance) {
    // Polar transform: |z|^2 ~ Exp(variance), phase uniform. Two uniforms per
    // sample, no rejection, so stream consumption is layout-independent.
    const double r = std::sqrt(-variance * std::log(next_double_open()));
    const double phase = 2.0 * std::numbers::pi * next_double();
    return std::polar(r, phase);
}

ChannelVector draw_channel(int n, RandomStream& stream) {
    if (n < 1) throw Error(ErrorCode::config_error, "channel length must be positive");
    ChannelVector h(static_cast<std::size_t>(n));
    draw_channel(stream, h);
    return h;
}

void draw_channel(RandomStream& stream, std::span<Complex> out) {
    for (Complex& entry : out) entry = stream.next_cn(1.0);
}

Complex draw_noise(double sigma2, RandomStream& stream) {
    if (!(sigma2 > 0.0) || !std::isfinite(sigma2)) {
        throw Error(ErrorCode::invalid_sigma, "noise variance must be finite and positive");
    }
    return stream.next_cn(sigma2);
}

} // namespace qce
