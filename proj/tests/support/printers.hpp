#pragma once

#include <ostream>

#include "roth/configurations.hpp"

namespace roth {

inline void PrintTo(const ConfigWitness& w, std::ostream* os) {
  *os << to_string(w.kind) << "[";
  for (const auto& p : w.points) {
    *os << "(";
    for (std::size_t i = 0; i < p.size(); ++i) *os << (i ? "," : "") << p[i];
    *os << ")";
  }
  *os << "]";
  if (w.parameter) *os << " param " << *w.parameter;
}

}  // namespace roth
