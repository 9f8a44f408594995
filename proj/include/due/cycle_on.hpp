#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "due/bitstring.hpp"
#include "due/codec.hpp"
#include "due/cycles.hpp"
#include "due/error.hpp"

namespace due {

/// One orbit that feeds the XOR combinator.
struct Generator {
    BitString seed;
    ParityRef pref;
    Direction dir = Direction::encode;
};

struct CycleOnConfig {
    std::size_t n = 0;
    BitString s0{1};
    std::vector<Generator> generators;
};

/// S_1 .. S_M, with S_M equal to the starting element.
struct CycleOnOrbit {
    std::vector<BitString> elements;

    std::size_t size() const noexcept { return elements.size(); }
};

/// Step j (producing S_{j+1}) combines element (j + cycle_on_phase) mod k of
/// each generator orbit, where element 0 is the seed. A phase of 1 makes the
/// first term the seed's transform; this reproduces the reference 16-bit
/// orbit of 2014.
inline constexpr std::uint64_t cycle_on_phase = 1;

/// Precomputed generator orbits and the XOR term for any step.
class GeneratorOrbits {
public:
    GeneratorOrbits(std::size_t n, std::span<const Generator> generators) : n_(n) {
        orbits_.reserve(generators.size());
        for (const Generator& g : generators) {
            if (g.seed.length() != n) {
                throw error(errc::length_mismatch, "generator seed has " + std::to_string(g.seed.length()) +
                                                       " bits, expected " + std::to_string(n));
            }
            orbits_.push_back(cycle_of(g.seed, g.pref, g.dir).elements);
            period_ = lcm_saturating(period_, orbits_.back().size());
        }
    }

    BitString term(std::uint64_t step) const {
        BitString acc(n_);
        for (const auto& orbit : orbits_) acc ^= orbit[(step + cycle_on_phase) % orbit.size()];
        return acc;
    }

    /// lcm of the generator cycle lengths (1 with no generators), saturating.
    std::uint64_t period() const noexcept { return period_; }

    std::vector<std::size_t> cycle_lengths() const {
        std::vector<std::size_t> out;
        for (const auto& orbit : orbits_) out.push_back(orbit.size());
        return out;
    }

private:
    static std::uint64_t lcm_saturating(std::uint64_t a, std::uint64_t b) {
        const std::uint64_t g = std::gcd(a, b);
        const std::uint64_t q = a / g;
        if (q > std::numeric_limits<std::uint64_t>::max() / b) return std::numeric_limits<std::uint64_t>::max();
        return q * b;
    }

    std::size_t n_;
    std::vector<std::vector<BitString>> orbits_;
    std::uint64_t period_ = 1;
};

/// Iterates S_{j+1} = S_j xor term(j) until S_0 recurs. Closure is not
/// guaranteed for arbitrary generators, so iteration stops with
/// errc::non_closure after twice the generator period.
inline CycleOnOrbit cycle_on(const CycleOnConfig& cfg) {
    if (cfg.s0.length() != cfg.n) {
        throw error(errc::length_mismatch,
                    "S0 has " + std::to_string(cfg.s0.length()) + " bits, expected " + std::to_string(cfg.n));
    }
    const GeneratorOrbits gens(cfg.n, cfg.generators);
    const std::uint64_t period = gens.period();
    const std::uint64_t bound = period > std::numeric_limits<std::uint64_t>::max() / 2
                                    ? std::numeric_limits<std::uint64_t>::max()
                                    : 2 * period;
    CycleOnOrbit orbit;
    BitString s = cfg.s0;
    for (std::uint64_t j = 0; j < bound; ++j) {
        s ^= gens.term(j);
        orbit.elements.push_back(s);
        if (s == cfg.s0) return orbit;
    }
    throw error(errc::non_closure, "no return to S0 within " + std::to_string(bound) + " steps");
}

/// Given S_index of an orbit under `generators`, returns S_0.
inline BitString recover_origin(const BitString& element, std::uint64_t index, std::span<const Generator> generators) {
    const GeneratorOrbits gens(element.length(), generators);
    BitString s = element;
    for (std::uint64_t i = 0; i < index; ++i) s ^= gens.term(i);
    return s;
}

}  // namespace due
