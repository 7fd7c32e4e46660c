#include "dfrc/masking.hpp"

#include <array>
#include <bit>
#include <charconv>
#include <fstream>

#include "dfrc/errors.hpp"

namespace dfrc {

namespace {

// One primitive feedback polynomial per register order. The register shifts
// right with the new bit entering at the top, so a polynomial term x^e taps
// register bit (order - e); the x^order term is the outgoing bit 0. Every
// entry is verified to reach the full period 2^order - 1 by the test suite.
struct TapEntry {
    int order;
    std::uint32_t taps;
};

template <std::size_t N>
constexpr std::uint32_t taps_of(int order, const int (&exponents)[N]) {
    std::uint32_t mask = 0;
    for (int e : exponents) mask |= 1u << (order - e);
    return mask;
}

constexpr std::array<TapEntry, 15> kPrimitiveTaps = {{
    {2, taps_of(2, {2, 1})},
    {3, taps_of(3, {3, 2})},
    {4, taps_of(4, {4, 3})},
    {5, taps_of(5, {5, 3})},
    {6, taps_of(6, {6, 5})},
    {7, taps_of(7, {7, 6})},
    {8, taps_of(8, {8, 6, 5, 4})},
    {9, taps_of(9, {9, 5})},
    {10, taps_of(10, {10, 7})},
    {11, taps_of(11, {11, 9})},
    {12, taps_of(12, {12, 6, 4, 1})},
    {13, taps_of(13, {13, 4, 3, 1})},
    {14, taps_of(14, {14, 5, 3, 1})},
    {15, taps_of(15, {15, 14})},
    {16, taps_of(16, {16, 15, 13, 4})},
}};

}  // namespace

MaskAlphabet mask_alphabet_from_name(const std::string& name) {
    if (name == "bipolar") return MaskAlphabet::Bipolar;
    if (name == "binary") return MaskAlphabet::Binary;
    throw ConfigError("unknown mask alphabet '" + name + "' (expected bipolar or binary)");
}

const char* mask_alphabet_name(MaskAlphabet alphabet) {
    return alphabet == MaskAlphabet::Bipolar ? "bipolar" : "binary";
}

std::uint32_t primitive_polynomial_taps(int order) {
    for (const auto& entry : kPrimitiveTaps) {
        if (entry.order == order) return entry.taps;
    }
    throw ConfigError("no primitive polynomial shipped for register order " +
                      std::to_string(order) + " (supported: 2..16)");
}

std::vector<std::uint8_t> mls_bits(int order, std::uint32_t seed_state) {
    const std::uint32_t taps = primitive_polynomial_taps(order);
    const std::uint32_t state_mask = (order == 32) ? ~0u : ((1u << order) - 1u);
    if (seed_state == 0 || (seed_state & ~state_mask) != 0) {
        throw InvalidSeedError("LFSR seed must be nonzero and fit in " +
                               std::to_string(order) + " bits");
    }

    const std::size_t period = (std::size_t{1} << order) - 1;
    std::vector<std::uint8_t> bits(period);
    std::uint32_t state = seed_state;
    for (std::size_t i = 0; i < period; ++i) {
        bits[i] = static_cast<std::uint8_t>(state & 1u);
        const std::uint32_t feedback = std::popcount(state & taps) & 1u;
        state = (state >> 1) | (feedback << (order - 1));
    }
    return bits;
}

int minimal_mask_order(std::size_t n_virtual) {
    for (int order = 2; order <= 16; ++order) {
        if (((std::size_t{1} << order) - 1) >= n_virtual) return order;
    }
    throw ConfigError("n_virtual " + std::to_string(n_virtual) +
                      " exceeds the longest shipped maximal sequence (2^16 - 1)");
}

MaskPattern generate_mls_mask(int order, std::size_t n_virtual, double amplitude,
                              std::uint32_t seed_state, MaskAlphabet alphabet) {
    if (n_virtual == 0) throw ConfigError("mask length must be at least 1");
    const std::size_t period = (std::size_t{1} << order) - 1;
    if (order < 2 || period < n_virtual) {
        throw InsufficientSequenceError(
            "maximal sequence of order " + std::to_string(order) + " has period " +
            std::to_string(period) + " < requested length " + std::to_string(n_virtual));
    }

    const auto bits = mls_bits(order, seed_state);
    MaskPattern mask;
    mask.amplitude = amplitude;
    mask.values.resize(n_virtual);
    for (std::size_t i = 0; i < n_virtual; ++i) {
        if (alphabet == MaskAlphabet::Bipolar) {
            mask.values[i] = bits[i] ? amplitude : -amplitude;
        } else {
            mask.values[i] = bits[i] ? amplitude : 0.0;
        }
    }
    return mask;
}

MaskedStream apply_mask(const InputSeries& input, const MaskPattern& mask) {
    if (input.values.empty()) throw EmptyInputError("cannot mask an empty input series");
    if (mask.values.empty()) throw ConfigError("mask pattern is empty");

    const std::size_t n = mask.values.size();
    MaskedStream stream;
    stream.n_virtual = n;
    stream.values.resize(input.values.size() * n);
    std::size_t j = 0;
    for (double sample : input.values) {
        for (std::size_t i = 0; i < n; ++i) {
            stream.values[j++] = sample * mask.values[i];
        }
    }
    return stream;
}

void write_mask(const MaskPattern& mask, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    for (double v : mask.values) {
        char buf[32];
        auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
        out.write(buf, end - buf);
        out.put('\n');
    }
    if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace dfrc
