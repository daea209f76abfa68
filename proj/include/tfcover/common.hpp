#pragma once

#include <stdexcept>
#include <string>

namespace tfcover {

// Input that cannot be parsed (graph6 lines, catalog records, CLI graph specs).
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A requested computation exceeds a configured enumeration bound.
struct capacity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Violated internal invariant; indicates a bug, not bad input.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

inline void check_internal(bool cond, const std::string& msg) {
  if (!cond) throw internal_error(msg);
}

}  // namespace tfcover
