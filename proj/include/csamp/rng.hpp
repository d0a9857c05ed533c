#pragma once

#include <cstdint>
#include <deque>
#include <optional>

namespace csamp {

/**
 * 16-bit maximal-length LFSR, the accelerator's random source.
 *
 * Fibonacci form with feedback polynomial x^16 + x^14 + x^13 + x^11 + 1:
 * right shift, XOR of bits 0/2/3/5 fed into bit 15. Any nonzero seed walks
 * all 65535 nonzero states before repeating; state 0 is absorbing and
 * rejected at construction.
 */
class Lfsr16 {
public:
    static constexpr std::uint32_t period = 65535;

    explicit Lfsr16(std::uint16_t seed);

    /// Advances one step and returns the new state, in [1, 65535].
    std::uint16_t next();

    std::uint16_t state() const { return state_; }
    std::uint16_t seed() const { return seed_; }

private:
    std::uint16_t state_;
    std::uint16_t seed_;
};

/// Reduces a raw random value to an offset in [0, d). Throws
/// std::invalid_argument when d == 0; degree-0 nodes are the caller's job.
std::uint32_t bounded(std::uint16_t r, std::uint32_t d);

/// Seed for parallel segment k: base_seed + k, remapped so 0 becomes 0xFFFF.
std::uint16_t segment_seed(std::uint16_t base_seed, std::uint32_t k);

struct ModuloJob {
    std::uint16_t value = 0;
    std::uint32_t modulus = 1;
};

struct PipelineStep {
    bool accepted = true;  // false: back-pressure, the caller must stall
    std::optional<std::uint32_t> output;
};

/**
 * Cycle model of the 8-lane modulo unit. Each reduction occupies a lane for
 * `latency` cycles; one job may enter and one result may retire per cycle,
 * in feed order. With latency <= 8 a continuously fed pipeline sustains one
 * result per cycle after warm-up.
 */
class ModuloPipeline {
public:
    static constexpr std::uint32_t lane_count = 8;

    explicit ModuloPipeline(std::uint32_t latency = 8);

    /// Models one clock edge. Retires at most one completed reduction, then
    /// accepts at most the offered job. A rejected job is reported through
    /// `accepted`, never dropped.
    PipelineStep step(std::optional<ModuloJob> feed = std::nullopt);

    std::uint64_t cycle() const { return cycle_; }
    std::size_t in_flight() const { return slots_.size(); }
    bool idle() const { return slots_.empty(); }

private:
    struct Slot {
        std::uint64_t ready_cycle;
        std::uint32_t value;
    };

    std::deque<Slot> slots_;
    std::uint32_t latency_;
    std::uint64_t cycle_ = 0;
};

}  // namespace csamp
