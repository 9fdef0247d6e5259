// SPDX-License-Identifier: Apache-2.0
#ifndef QCE_RNG_HPP
#define QCE_RNG_HPP

#include <array>
#include <cstdint>
#include <span>

#include "qce/types.hpp"

namespace qce {

/// Counter-based substream (Philox4x32-10). Distinct (master_seed, stream_id)
/// pairs give independent, reproducible substreams, so a parallel layout can
/// assign one stream per trial block without any shared state.
///
/// Gaussian draws are fixed to the polar transform: a complex CN(0, v) sample
/// is sqrt(-v ln U1) * exp(j 2 pi U2) with U1 in (0,1], U2 in [0,1). This
/// method is part of the reproducibility contract; changing it changes every
/// seeded result.
class RandomStream {
  public:
    RandomStream(std::uint64_t master_seed, std::uint64_t stream_id);

    std::uint64_t master_seed() const { return master_seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

    std::uint32_t next_u32();
    std::uint64_t next_u64();

    /// Uniform on [0, 1), 53-bit resolution.
    double next_double();
    /// Uniform on (0, 1]; safe as a log() argument.
    double next_double_open();
    /// Uniform on [lo, hi).
    double next_uniform(double lo, double hi);
    /// Uniform integer in {0, ..., n-1}.
    std::uint32_t next_index(std::uint32_t n);

    /// One CN(0, variance) sample.
    Complex next_cn(double variance);

  private:
    void refill();

    std::uint64_t master_seed_ = 0;
    std::uint64_t stream_id_ = 0;
    std::uint64_t block_ = 0;
    std::array<std::uint32_t, 4> buffer_{};
    int buffer_pos_ = 4;
};

/// Raw Philox4x32-10 block function, exposed for known-answer tests.
std::array<std::uint32_t, 4> philox4x32(const std::array<std::uint32_t, 4>& counter,
                                        const std::array<std::uint32_t, 2>& key);

/// i.i.d. CN(0,1) fading vector of length n (entries have unit mean-square
/// magnitude; real and imaginary parts are independent N(0, 1/2)).
ChannelVector draw_channel(int n, RandomStream& stream);
void draw_channel(RandomStream& stream, std::span<Complex> out);

/// One CN(0, sigma2) noise sample. Throws Error(invalid_sigma) unless
/// sigma2 is finite and positive.
Complex draw_noise(double sigma2, RandomStream& stream);

} // namespace qce

#endif
