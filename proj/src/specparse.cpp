#include "dnastore/specparse.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace dnastore {

namespace {

struct ParsedSpec {
    std::string name;
    std::vector<std::string> args;  // comma-separated after the colon
};

ParsedSpec split_spec(const std::string& text) {
    ParsedSpec p;
    const auto colon = text.find(':');
    p.name = text.substr(0, colon);
    if (colon != std::string::npos) {
        std::istringstream rest(text.substr(colon + 1));
        std::string item;
        while (std::getline(rest, item, ',')) p.args.push_back(item);
    }
    return p;
}

double num(const ParsedSpec& p, std::size_t i) {
    if (i >= p.args.size())
        throw std::invalid_argument("spec '" + p.name + "' is missing an argument");
    return std::stod(p.args[i]);
}

[[noreturn]] void bad(const std::string& what, const std::string& text) {
    throw std::invalid_argument("unrecognized " + what + " spec: '" + text + "'");
}

}  // namespace

SamplingSpec parse_sampling_spec(const std::string& text) {
    const auto p = split_spec(text);
    if (p.name == "single") return SamplingSpec::single_draw(num(p, 0));
    if (p.name == "poisson") return SamplingSpec::poisson(num(p, 0));
    if (p.name == "fixed") return SamplingSpec::fixed(static_cast<std::uint32_t>(num(p, 0)));
    if (p.name == "negbin") return SamplingSpec::neg_binomial(num(p, 0), num(p, 1));
    if (p.name == "pcr") return SamplingSpec::poisson_pcr(num(p, 0), num(p, 1));
    if (p.name == "empirical") {
        if (p.args.empty()) bad("sampling", text);
        return SamplingSpec::empirical(load_empirical_weights(p.args[0]));
    }
    bad("sampling", text);
}

NoiseSpec parse_noise_spec(const std::string& text) {
    const auto p = split_spec(text);
    if (p.name == "identity" || p.name == "none") return NoiseSpec::identity();
    if (p.name == "bsc") return NoiseSpec::bsc(num(p, 0));
    if (p.name == "bec") return NoiseSpec::bec(num(p, 0));
    if (p.name == "qsc") return NoiseSpec::qsc(num(p, 0));
    if (p.name == "indel") return NoiseSpec::indel(num(p, 0), num(p, 1), num(p, 2));
    bad("noise", text);
}

TornSpec parse_torn_spec(const std::string& text) {
    // length law first, then an optional ",del=<profile>"
    TornSpec spec;
    std::string head = text, del;
    const auto delpos = text.find(",del=");
    if (delpos != std::string::npos) {
        head = text.substr(0, delpos);
        del = text.substr(delpos + 5);
    }
    const auto p = split_spec(head);
    if (p.name == "geom") {
        spec.length_law = GeometricTear{num(p, 0)};
    } else if (p.name == "fixedlen") {
        spec.length_law = FixedTear{static_cast<std::uint64_t>(num(p, 0))};
    } else if (p.name == "uniform") {
        spec.length_law = UniformTear{num(p, 0)};
    } else {
        bad("torn", text);
    }
    if (!del.empty()) {
        const auto d = split_spec(del);
        if (d.name == "zero") spec.deletion = ZeroDeletion{};
        else if (d.name == "const") spec.deletion = ConstDeletion{num(d, 0)};
        else if (d.name == "exp") spec.deletion = ExpDeletion{num(d, 0)};
        else bad("deletion profile", text);
    }
    return spec;
}

InnerCodeSpec parse_inner_spec(const std::string& text) {
    const auto p = split_spec(text);
    if (p.name == "none") return InnerCodeSpec::none();
    if (p.name == "rep") return InnerCodeSpec::repetition(static_cast<int>(num(p, 0)));
    if (p.name == "parity") {
        if (p.args.empty()) bad("inner", text);
        const auto x = p.args[0].find('x');
        if (x == std::string::npos) bad("inner", text);
        return InnerCodeSpec::parity_product(std::stoi(p.args[0].substr(0, x)),
                                             std::stoi(p.args[0].substr(x + 1)));
    }
    bad("inner", text);
}

}  // namespace dnastore
