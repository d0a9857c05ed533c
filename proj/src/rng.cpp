#include "csamp/rng.hpp"

#include <stdexcept>

namespace csamp {

Lfsr16::Lfsr16(std::uint16_t seed) : state_(seed), seed_(seed) {
    if (seed == 0)
        throw std::invalid_argument("LFSR seed 0 is absorbing; pick a nonzero seed");
}

std::uint16_t Lfsr16::next() {
    // x^16 + x^14 + x^13 + x^11 + 1: taps at bits 0, 2, 3, 5 of the
    // right-shifting register, feedback into bit 15.
    const std::uint16_t s = state_;
    const std::uint16_t bit =
        ((s >> 0) ^ (s >> 2) ^ (s >> 3) ^ (s >> 5)) & 1u;
    state_ = static_cast<std::uint16_t>((s >> 1) | (bit << 15));
    return state_;
}

std::uint32_t bounded(std::uint16_t r, std::uint32_t d) {
    if (d == 0)
        throw std::invalid_argument("cannot reduce to an empty range (d = 0)");
    return r % d;
}

std::uint16_t segment_seed(std::uint16_t base_seed, std::uint32_t k) {
    const auto seed = static_cast<std::uint16_t>(base_seed + k);
    return seed == 0 ? std::uint16_t{0xFFFF} : seed;
}

ModuloPipeline::ModuloPipeline(std::uint32_t latency) : latency_(latency) {
    if (latency == 0)
        throw std::invalid_argument("modulo latency must be at least one cycle");
}

PipelineStep ModuloPipeline::step(std::optional<ModuloJob> feed) {
    PipelineStep result;

    // Retire before accept, so a full pipeline frees a lane for this cycle's
    // new job. A job fed at cycle t retires at cycle t + latency.
    if (!slots_.empty() && slots_.front().ready_cycle <= cycle_) {
        result.output = slots_.front().value;
        slots_.pop_front();
    }

    if (feed) {
        if (slots_.size() >= lane_count) {
            result.accepted = false;  // back-pressure: caller retries the job
        } else {
            slots_.push_back({cycle_ + latency_, bounded(feed->value, feed->modulus)});
        }
    }
    ++cycle_;
    return result;
}

}  // namespace csamp
