#include "dnastore/seq.hpp"

#include <fstream>
#include <sstream>

namespace dnastore {

Histogram pool_to_histogram(const ReadPool& pool) {
    pool.require_fixed_length();
    Histogram h;
    for (const auto& r : pool.reads) h.add(r);
    return h;
}

bool multiset_equal(const ReadPool& a, const ReadPool& b) {
    if (a.alphabet != b.alphabet) return false;
    if (a.reads.size() != b.reads.size()) return false;
    Histogram ha, hb;
    for (const auto& r : a.reads) ha.add(r);
    for (const auto& r : b.reads) hb.add(r);
    return ha == hb;
}

ReadPool histogram_to_pool(const Histogram& h, const Alphabet& a) {
    ReadPool pool;
    pool.alphabet = a;
    pool.ordered = false;
    for (const auto& [seq, count] : h.counts())
        for (std::uint64_t i = 0; i < count; ++i) pool.reads.push_back(seq);
    return pool;
}

std::string format_pool(const ReadPool& pool) {
    std::string out;
    for (const auto& r : pool.reads) {
        out += r.to_string(pool.alphabet);
        out.push_back('\n');
    }
    return out;
}

ReadPool parse_pool(const std::string& text, const Alphabet& a) {
    ReadPool pool;
    pool.alphabet = a;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        pool.reads.push_back(Sequence::parse(line, a));
    }
    return pool;
}

void write_pool(const ReadPool& pool, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << format_pool(pool);
}

ReadPool read_pool(const std::string& path, const Alphabet& a) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_pool(buf.str(), a);
}

}  // namespace dnastore
