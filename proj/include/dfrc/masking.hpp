#ifndef DFRC_MASKING_HPP
#define DFRC_MASKING_HPP

#include <cstdint>
#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace dfrc {

// Discrete input series, one value per loop period tau.
struct InputSeries {
    std::vector<double> values;
};

// Level set a maximal-length bit sequence is mapped onto.
//   Bipolar: bit 1 -> +amplitude, bit 0 -> -amplitude
//   Binary:  bit 1 -> +amplitude, bit 0 -> 0
enum class MaskAlphabet {
    Bipolar,
    Binary,
};

MaskAlphabet mask_alphabet_from_name(const std::string& name);
const char* mask_alphabet_name(MaskAlphabet alphabet);

// Per-virtual-node input weights, one value per theta slot.
struct MaskPattern {
    std::vector<double> values;
    double amplitude = 1.0;
};

// Masked drive signal: input sample k held over n_virtual theta slots and
// multiplied slot-wise by the mask, so values[k*N + i] = input[k] * mask[i].
struct MaskedStream {
    std::vector<double> values;
    std::size_t n_virtual = 0;

    std::size_t periods() const { return n_virtual == 0 ? 0 : values.size() / n_virtual; }
};

// Fibonacci LFSR taps for the shipped primitive polynomial of the given
// register order (2..16). Bit i of the result selects state bit i, i.e. the
// x^(i+1) coefficient of the feedback polynomial.
std::uint32_t primitive_polynomial_taps(int order);

// Full maximal-length bit sequence (period 2^order - 1) starting from
// seed_state. Throws InvalidSeedError for a zero or out-of-range seed.
std::vector<std::uint8_t> mls_bits(int order, std::uint32_t seed_state);

// Maximal-length-sequence mask: generates the full 2^order - 1 bit sequence,
// maps it onto the requested alphabet and truncates to the first n_virtual
// values. Throws InsufficientSequenceError when the period is too short.
MaskPattern generate_mls_mask(int order, std::size_t n_virtual, double amplitude,
                              std::uint32_t seed_state,
                              MaskAlphabet alphabet = MaskAlphabet::Bipolar);

// Smallest register order whose maximal sequence covers n_virtual values.
int minimal_mask_order(std::size_t n_virtual);

// Sample-and-hold masking: every input value is held across the mask's
// slots. Throws EmptyInputError for an empty series.
MaskedStream apply_mask(const InputSeries& input, const MaskPattern& mask);

// One value per line.
void write_mask(const MaskPattern& mask, const std::filesystem::path& path);

}  // namespace dfrc

#endif  // DFRC_MASKING_HPP
