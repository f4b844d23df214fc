#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cmgraph/graph.hpp"

namespace cmgraph::fixtures {

/// 11-vertex graph whose edge ring is Cohen-Macaulay in characteristic 0 but not 2.
inline constexpr std::string_view kFig1 =
    "11 25\n"
    "1 4\n1 5\n1 8\n1 9\n"
    "2 5\n2 6\n2 8\n2 10\n2 11\n"
    "3 6\n3 7\n3 9\n3 10\n"
    "4 7\n4 8\n4 11\n"
    "5 9\n5 10\n5 11\n"
    "6 8\n6 9\n6 11\n"
    "7 10\n7 11\n"
    "9 11\n";

inline std::vector<std::string> names() { return {"fig1"}; }

inline std::string_view text(std::string_view name) {
  if (name == "fig1") return kFig1;
  throw std::invalid_argument("unknown fixture \"" + std::string(name) + "\"");
}

inline Graph fig1() { return parse_graph(kFig1); }

}  // namespace cmgraph::fixtures
