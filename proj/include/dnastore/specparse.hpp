#pragma once

#include <string>

#include "dnastore/channel.hpp"
#include "dnastore/codec_index.hpp"
#include "dnastore/sampling.hpp"

namespace dnastore {

// Compact spec strings used on the command line, e.g. "poisson:2.0",
// "bsc:0.05", "geom:0.01,del=const:0.2", "parity:6x6".

SamplingSpec parse_sampling_spec(const std::string& text);
NoiseSpec parse_noise_spec(const std::string& text);
TornSpec parse_torn_spec(const std::string& text);
InnerCodeSpec parse_inner_spec(const std::string& text);

}  // namespace dnastore
