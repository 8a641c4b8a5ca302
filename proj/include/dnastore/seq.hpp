#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "dnastore/rng.hpp"

namespace dnastore {

struct BadPool : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Symbol alphabet: binary {0,1} or quaternary {A,C,G,T} with the fixed
// mapping A=0, C=1, G=2, T=3.  The erasure marker '?' is stored internally
// as index == size so every symbol lives in one small-integer domain.
class Alphabet {
public:
    static Alphabet binary() { return Alphabet(2); }
    static Alphabet dna() { return Alphabet(4); }
    static Alphabet of_size(int size) { return Alphabet(size); }

    int size() const { return size_; }
    std::uint8_t erasure() const { return static_cast<std::uint8_t>(size_); }

    char to_char(std::uint8_t idx) const {
        if (idx == erasure()) return '?';
        if (idx >= size_) throw std::invalid_argument("symbol index out of range");
        return size_ == 2 ? "01"[idx] : "ACGT"[idx];
    }

    // returns size() for '?', throws on anything else invalid
    std::uint8_t from_char(char c) const {
        if (c == '?') return erasure();
        if (size_ == 2) {
            if (c == '0') return 0;
            if (c == '1') return 1;
        } else {
            switch (c) {
                case 'A': return 0;
                case 'C': return 1;
                case 'G': return 2;
                case 'T': return 3;
            }
        }
        throw BadPool(std::string("invalid symbol character '") + c + "'");
    }

    bool operator==(const Alphabet& o) const { return size_ == o.size_; }
    bool operator!=(const Alphabet& o) const { return !(*this == o); }

private:
    explicit Alphabet(int size) : size_(size) {
        if (size != 2 && size != 4) throw std::invalid_argument("alphabet size must be 2 or 4");
    }
    int size_;
};

// Value-type symbol string; compared by content so multiset semantics work.
struct Sequence {
    std::vector<std::uint8_t> sym;

    Sequence() = default;
    explicit Sequence(std::vector<std::uint8_t> s) : sym(std::move(s)) {}
    static Sequence zeros(std::size_t n) { return Sequence(std::vector<std::uint8_t>(n, 0)); }

    std::size_t size() const { return sym.size(); }
    std::uint8_t& operator[](std::size_t i) { return sym[i]; }
    std::uint8_t operator[](std::size_t i) const { return sym[i]; }
    const std::uint8_t* data() const { return sym.data(); }

    bool operator==(const Sequence& o) const { return sym == o.sym; }
    bool operator!=(const Sequence& o) const { return sym != o.sym; }
    // length-then-lex; the canonical order used for histogram keys and ties
    bool operator<(const Sequence& o) const {
        if (sym.size() != o.sym.size()) return sym.size() < o.sym.size();
        return sym < o.sym;
    }

    bool has_erasure(const Alphabet& a) const {
        for (auto s : sym)
            if (s == a.erasure()) return true;
        return false;
    }

    std::string to_string(const Alphabet& a) const {
        std::string out;
        out.reserve(sym.size());
        for (auto s : sym) out.push_back(a.to_char(s));
        return out;
    }

    static Sequence parse(const std::string& text, const Alphabet& a) {
        Sequence s;
        s.sym.reserve(text.size());
        for (char c : text) s.sym.push_back(a.from_char(c));
        return s;
    }

    static Sequence random(std::size_t n, const Alphabet& a, RandomStream& rng) {
        Sequence s;
        s.sym.resize(n);
        for (auto& x : s.sym) x = static_cast<std::uint8_t>(rng.below(a.size()));
        return s;
    }
};

// A list of reads.  Input pools are ordered; channel outputs are multisets
// and the flag records that the ordering carries no information.
struct ReadPool {
    Alphabet alphabet = Alphabet::binary();
    std::vector<Sequence> reads;
    bool ordered = true;

    std::size_t size() const { return reads.size(); }

    // all reads share one length (torn-paper outputs are exempt)
    void require_fixed_length() const {
        if (reads.empty()) return;
        const std::size_t n = reads.front().size();
        for (const auto& r : reads)
            if (r.size() != n) throw BadPool("pool has mixed read lengths");
    }
};

class Histogram {
public:
    void add(const Sequence& s, std::uint64_t count = 1) {
        if (count == 0) return;
        counts_[s] += count;
        total_ += count;
    }
    std::uint64_t total() const { return total_; }
    std::uint64_t count(const Sequence& s) const {
        auto it = counts_.find(s);
        return it == counts_.end() ? 0 : it->second;
    }
    const std::map<Sequence, std::uint64_t>& counts() const { return counts_; }
    bool operator==(const Histogram& o) const { return counts_ == o.counts_; }

private:
    std::map<Sequence, std::uint64_t> counts_;
    std::uint64_t total_ = 0;
};

Histogram pool_to_histogram(const ReadPool& pool);
bool multiset_equal(const ReadPool& a, const ReadPool& b);
ReadPool histogram_to_pool(const Histogram& h, const Alphabet& a);

// one sequence per line, '\n'-terminated, no header; bit-exact interop format
std::string format_pool(const ReadPool& pool);
ReadPool parse_pool(const std::string& text, const Alphabet& a);
void write_pool(const ReadPool& pool, const std::string& path);
ReadPool read_pool(const std::string& path, const Alphabet& a);

}  // namespace dnastore
