#include "dnastore/codec_index.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace dnastore {

InnerCodeSpec InnerCodeSpec::repetition(int r) {
    if (r < 1 || r % 2 == 0) throw LayoutError("repetition factor must be odd and >= 1");
    InnerCodeSpec s;
    s.kind = Kind::Repetition;
    s.rep = r;
    return s;
}

InnerCodeSpec InnerCodeSpec::parity_product(int rows, int cols) {
    if (rows < 1 || cols < 1) throw LayoutError("parity product needs rows, cols >= 1");
    InnerCodeSpec s;
    s.kind = Kind::ParityProduct;
    s.rows = rows;
    s.cols = cols;
    return s;
}

int InnerCodeSpec::data_bits(int channel_bits) const {
    switch (kind) {
        case Kind::None:
            return channel_bits;
        case Kind::Repetition:
            if (channel_bits % rep != 0)
                throw LayoutError("sequence length not divisible by repetition factor");
            return channel_bits / rep;
        case Kind::ParityProduct: {
            const int need = rows * cols + rows + cols;
            if (need != channel_bits) {
                std::ostringstream msg;
                msg << "parity product " << rows << "x" << cols << " needs length " << need
                    << ", sequence length is " << channel_bits;
                throw LayoutError(msg.str());
            }
            return rows * cols;
        }
    }
    return 0;
}

int InnerCodeSpec::coded_bits(int data) const {
    switch (kind) {
        case Kind::None: return data;
        case Kind::Repetition: return data * rep;
        case Kind::ParityProduct: return rows * cols + rows + cols;
    }
    return 0;
}

std::vector<std::uint8_t> InnerCodeSpec::encode(const std::vector<std::uint8_t>& data) const {
    switch (kind) {
        case Kind::None:
            return data;
        case Kind::Repetition: {
            std::vector<std::uint8_t> out;
            out.reserve(data.size() * rep);
            for (auto b : data)
                for (int i = 0; i < rep; ++i) out.push_back(b);
            return out;
        }
        case Kind::ParityProduct: {
            if (static_cast<int>(data.size()) != rows * cols)
                throw LayoutError("parity product: wrong data size");
            std::vector<std::uint8_t> out(data);
            for (int r = 0; r < rows; ++r) {
                std::uint8_t p = 0;
                for (int c = 0; c < cols; ++c) p ^= data[r * cols + c];
                out.push_back(p);
            }
            for (int c = 0; c < cols; ++c) {
                std::uint8_t p = 0;
                for (int r = 0; r < rows; ++r) p ^= data[r * cols + c];
                out.push_back(p);
            }
            return out;
        }
    }
    return {};
}

InnerCodeSpec::InnerDecode InnerCodeSpec::decode(const std::vector<std::uint8_t>& coded) const {
    InnerDecode res;
    switch (kind) {
        case Kind::None:
            res.data = coded;
            return res;
        case Kind::Repetition: {
            const int n = static_cast<int>(coded.size()) / rep;
            res.data.resize(n);
            for (int i = 0; i < n; ++i) {
                int ones = 0;
                for (int j = 0; j < rep; ++j) ones += coded[i * rep + j];
                res.data[i] = ones * 2 > rep ? 1 : 0;
                res.corrected += std::min(ones, rep - ones);
            }
            return res;
        }
        case Kind::ParityProduct: {
            res.data.assign(coded.begin(), coded.begin() + rows * cols);
            std::vector<int> bad_rows, bad_cols;
            for (int r = 0; r < rows; ++r) {
                std::uint8_t p = 0;
                for (int c = 0; c < cols; ++c) p ^= res.data[r * cols + c];
                if (p != coded[rows * cols + r]) bad_rows.push_back(r);
            }
            for (int c = 0; c < cols; ++c) {
                std::uint8_t p = 0;
                for (int r = 0; r < rows; ++r) p ^= res.data[r * cols + c];
                if (p != coded[rows * cols + rows + c]) bad_cols.push_back(c);
            }
            if (bad_rows.empty() && bad_cols.empty()) return res;
            if (bad_rows.size() == 1 && bad_cols.size() == 1) {
                res.data[bad_rows[0] * cols + bad_cols[0]] ^= 1;
                res.corrected = 1;
                return res;
            }
            if (bad_rows.size() + bad_cols.size() == 1) {
                // a parity bit itself was hit; data unchanged
                res.corrected = 1;
                return res;
            }
            res.failed = true;  // >= 2 errors, pattern not correctable
            return res;
        }
    }
    return res;
}

std::string InnerCodeSpec::describe() const {
    switch (kind) {
        case Kind::None: return "none";
        case Kind::Repetition: return "rep:" + std::to_string(rep);
        case Kind::ParityProduct:
            return "parity:" + std::to_string(rows) + "x" + std::to_string(cols);
    }
    return "?";
}

namespace {

int smallest_field_bits(int n) {
    int m = 1;
    while ((1 << m) < n) ++m;
    return m;
}

}  // namespace

IndexLayout make_layout(int m, int l, const OuterCodeSpec& outer, const InnerCodeSpec& inner) {
    if (m < 2) throw LayoutError("need at least 2 sequences");
    if (l < 1) throw LayoutError("sequence length must be positive");
    IndexLayout lay;
    lay.m_sequences = m;
    lay.l_symbols = l;
    lay.index_bits = static_cast<int>(std::ceil(std::log2(static_cast<double>(m))));
    lay.inner_data_bits = inner.data_bits(l);
    lay.payload_bits = lay.inner_data_bits - lay.index_bits;
    if (lay.payload_bits < 1) throw LayoutError("no payload room after the index prefix");

    if (outer.n < 1 || outer.k < 0 || outer.k > outer.n)
        throw LayoutError("outer code needs 0 <= k <= n");
    if (m % outer.n != 0) throw LayoutError("M must be a multiple of the outer block length");
    lay.blocks = m / outer.n;
    lay.field_bits = outer.field_bits > 0 ? outer.field_bits : smallest_field_bits(outer.n);
    if ((1 << lay.field_bits) < outer.n)
        throw LayoutError("outer field too small for block length");
    if (lay.payload_bits % lay.field_bits != 0)
        throw LayoutError("payload bits not divisible by the outer symbol size");
    lay.rows = lay.payload_bits / lay.field_bits;
    lay.message_bits = lay.blocks * lay.rows * outer.k * lay.field_bits;
    return lay;
}

double rate_of(const IndexLayout& layout, const OuterCodeSpec&) {
    return static_cast<double>(layout.message_bits) /
           (static_cast<double>(layout.m_sequences) * layout.l_symbols);
}

namespace {

void put_bits(std::vector<std::uint8_t>& bits, std::size_t at, std::uint64_t value, int width) {
    for (int b = 0; b < width; ++b)
        bits[at + b] = static_cast<std::uint8_t>((value >> (width - 1 - b)) & 1u);
}

std::uint64_t get_bits(const std::vector<std::uint8_t>& bits, std::size_t at, int width) {
    std::uint64_t v = 0;
    for (int b = 0; b < width; ++b) v = (v << 1) | bits[at + b];
    return v;
}

}  // namespace

ReadPool index_encode(const std::vector<std::uint8_t>& message_bits, const IndexLayout& lay,
                      const OuterCodeSpec& outer, const InnerCodeSpec& inner) {
    if (static_cast<int>(message_bits.size()) != lay.message_bits)
        throw LayoutError("message length must be exactly " + std::to_string(lay.message_bits) +
                          " bits");
    const ReedSolomon rs(outer.n, outer.k, lay.field_bits);

    // codeword symbol per (block, row, column)
    std::vector<std::vector<std::vector<std::uint16_t>>> coded(
        lay.blocks, std::vector<std::vector<std::uint16_t>>(lay.rows));
    std::size_t at = 0;
    for (int b = 0; b < lay.blocks; ++b) {
        for (int r = 0; r < lay.rows; ++r) {
            std::vector<std::uint16_t> msg(outer.k);
            for (int i = 0; i < outer.k; ++i) {
                msg[i] = static_cast<std::uint16_t>(get_bits(message_bits, at, lay.field_bits));
                at += lay.field_bits;
            }
            coded[b][r] = rs.encode(msg);
        }
    }

    ReadPool pool;
    pool.alphabet = Alphabet::binary();
    pool.ordered = true;
    pool.reads.reserve(lay.m_sequences);
    for (int j = 0; j < lay.m_sequences; ++j) {
        const int b = j / outer.n;
        const int i = j % outer.n;
        std::vector<std::uint8_t> data(lay.inner_data_bits, 0);
        put_bits(data, 0, static_cast<std::uint64_t>(j), lay.index_bits);
        for (int r = 0; r < lay.rows; ++r)
            put_bits(data, lay.index_bits + static_cast<std::size_t>(r) * lay.field_bits,
                     coded[b][r][i], lay.field_bits);
        pool.reads.emplace_back(inner.encode(data));
    }
    return pool;
}

CodecReport index_decode(const ReadPool& reads, const IndexLayout& lay,
                         const OuterCodeSpec& outer, const InnerCodeSpec& inner) {
    CodecReport report;
    const ReedSolomon rs(outer.n, outer.k, lay.field_bits);

    struct Candidate {
        std::vector<std::uint8_t> payload;
        int corrected;
    };
    std::vector<std::vector<Candidate>> by_index(lay.m_sequences);

    for (const auto& read : reads.reads) {
        // length mismatches (e.g. indel survivors) are dropped as erasures
        if (static_cast<int>(read.size()) != lay.l_symbols) {
            ++report.inner_failures;
            continue;
        }
        auto dec = inner.decode(read.sym);
        if (dec.failed) {
            ++report.inner_failures;
            continue;
        }
        const auto idx = get_bits(dec.data, 0, lay.index_bits);
        if (idx >= static_cast<std::uint64_t>(lay.m_sequences)) {
            ++report.inner_failures;
            continue;
        }
        by_index[idx].push_back(
            {std::vector<std::uint8_t>(dec.data.begin() + lay.index_bits, dec.data.end()),
             dec.corrected});
    }

    // candidate selection: fewest corrected errors, then plurality of the
    // payload, then canonical (lexicographically smallest) payload
    std::vector<std::optional<std::vector<std::uint8_t>>> column(lay.m_sequences);
    for (int j = 0; j < lay.m_sequences; ++j) {
        auto& cands = by_index[j];
        if (cands.empty()) {
            ++report.missing_indices;
            continue;
        }
        int best = cands[0].corrected;
        for (const auto& c : cands) best = std::min(best, c.corrected);
        std::map<std::vector<std::uint8_t>, int> freq;
        for (const auto& c : cands)
            if (c.corrected == best) ++freq[c.payload];
        int top = 0;
        for (const auto& [payload, count] : freq) top = std::max(top, count);
        for (const auto& [payload, count] : freq) {
            if (count == top) {
                column[j] = payload;  // std::map iterates in canonical order
                break;
            }
        }
    }

    report.message_bits.assign(lay.message_bits, 0);
    bool all_ok = true;
    std::size_t at = 0;
    for (int b = 0; b < lay.blocks && all_ok; ++b) {
        for (int r = 0; r < lay.rows; ++r) {
            std::vector<std::uint16_t> received(outer.n, ReedSolomon::kErased);
            for (int i = 0; i < outer.n; ++i) {
                const int j = b * outer.n + i;
                if (column[j])
                    received[i] = static_cast<std::uint16_t>(
                        get_bits(*column[j], static_cast<std::size_t>(r) * lay.field_bits,
                                 lay.field_bits));
            }
            const auto decoded = rs.decode(received);
            if (!decoded) {
                all_ok = false;
                report.detail = "outer decode failed in block " + std::to_string(b) + ", row " +
                                std::to_string(r);
                break;
            }
            report.erasures_corrected += decoded->erasures;
            report.substitutions_corrected += decoded->substitutions;
            for (int i = 0; i < outer.k; ++i) {
                put_bits(report.message_bits, at, decoded->message[i], lay.field_bits);
                at += lay.field_bits;
            }
        }
    }
    report.ok = all_ok;
    if (!all_ok) report.message_bits.clear();
    return report;
}

std::vector<std::uint8_t> bytes_to_bits(const std::vector<std::uint8_t>& bytes) {
    std::vector<std::uint8_t> bits;
    bits.reserve(bytes.size() * 8);
    for (auto byte : bytes)
        for (int b = 7; b >= 0; --b) bits.push_back((byte >> b) & 1u);
    return bits;
}

std::vector<std::uint8_t> bits_to_bytes(const std::vector<std::uint8_t>& bits) {
    std::vector<std::uint8_t> bytes((bits.size() + 7) / 8, 0);
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) bytes[i / 8] |= static_cast<std::uint8_t>(1u << (7 - i % 8));
    return bytes;
}

}  // namespace dnastore
