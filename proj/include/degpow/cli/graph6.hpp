#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "degpow/core/model.hpp"

namespace degpow::cli {

class Graph6Error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Decodes a graph6 string (optional ">>graph6<<" prefix) of order <= 8.
SmallGraph parse_graph6(std::string_view text);

std::string encode_graph6(const SmallGraph& g);

} // namespace degpow::cli
