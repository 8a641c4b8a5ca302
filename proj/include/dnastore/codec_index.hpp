#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dnastore/reed_solomon.hpp"
#include "dnastore/seq.hpp"

namespace dnastore {

struct LayoutError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Inner per-sequence code.  These are desk-scale stand-ins with exact
// contracts; the decoder exposes corrected-error counts so the
// duplicate-selection rule can prefer cleaner reads.
struct InnerCodeSpec {
    enum class Kind { None, Repetition, ParityProduct };
    Kind kind = Kind::None;
    int rep = 1;             // Repetition factor (odd)
    int rows = 0, cols = 0;  // ParityProduct data grid

    static InnerCodeSpec none() { return {}; }
    static InnerCodeSpec repetition(int r);
    static InnerCodeSpec parity_product(int rows, int cols);

    // data bits for a codeword of channel_bits total length; throws when the
    // shape does not fit exactly
    int data_bits(int channel_bits) const;
    int coded_bits(int data_bits) const;

    std::vector<std::uint8_t> encode(const std::vector<std::uint8_t>& data) const;

    struct InnerDecode {
        std::vector<std::uint8_t> data;
        int corrected = 0;
        bool failed = false;
    };
    InnerDecode decode(const std::vector<std::uint8_t>& coded) const;

    std::string describe() const;
};

// outer MDS code applied row-wise across the sequence columns
struct OuterCodeSpec {
    int n = 0;          // block length; M must be a multiple of n
    int k = 0;          // data symbols per row
    int field_bits = 0;  // 0 = smallest field with 2^m >= n
};

struct IndexLayout {
    int m_sequences = 0;
    int l_symbols = 0;

    int index_bits = 0;
    int inner_data_bits = 0;  // index_bits + payload_bits
    int payload_bits = 0;
    int field_bits = 0;
    int blocks = 0;  // M / n_outer
    int rows = 0;    // payload_bits / field_bits
    int message_bits = 0;
};

// validates the whole configuration and derives the layout; throws
// LayoutError when anything does not fit exactly
IndexLayout make_layout(int m, int l, const OuterCodeSpec& outer, const InnerCodeSpec& inner);

// exact achieved bits per stored symbol
double rate_of(const IndexLayout& layout, const OuterCodeSpec& outer);

ReadPool index_encode(const std::vector<std::uint8_t>& message_bits, const IndexLayout& layout,
                      const OuterCodeSpec& outer, const InnerCodeSpec& inner);

enum class SeqStatus { Ok, Erased, InnerFailure };

struct CodecReport {
    bool ok = false;
    std::vector<std::uint8_t> message_bits;
    int erasures_corrected = 0;       // summed over outer rows
    int substitutions_corrected = 0;  // summed over outer rows
    int inner_failures = 0;           // reads dropped by the inner decoder
    int missing_indices = 0;
    std::string detail;
};

CodecReport index_decode(const ReadPool& reads, const IndexLayout& layout,
                         const OuterCodeSpec& outer, const InnerCodeSpec& inner);

// raw bytes <-> bit vector, most-significant bit first within each byte
std::vector<std::uint8_t> bytes_to_bits(const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> bits_to_bytes(const std::vector<std::uint8_t>& bits);

}  // namespace dnastore
