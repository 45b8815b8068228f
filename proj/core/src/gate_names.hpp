#pragma once

#include <string>
#include <unordered_map>

#include "bgpc/text.hpp"

namespace bgpc::detail {

// Maps gate names from a circuit file to positions.
struct GateNames {
  std::unordered_map<std::string, std::size_t> ids;

  std::size_t ref(const std::string& name, std::size_t line) const {
    auto it = ids.find(name);
    if (it == ids.end()) text::fail(line, "unknown gate '" + name + "'");
    return it->second;
  }
  void define(const std::string& name, std::size_t position, std::size_t line) {
    if (!ids.emplace(name, position).second) text::fail(line, "gate '" + name + "' defined twice");
  }
};

}  // namespace bgpc::detail
