#pragma once

#include <string>

#include "hgspq/arith.hpp"

namespace hgspq::detail {

inline std::string cyc(u64 n) { return "C_" + std::to_string(n); }

inline std::string paren(const std::string& s) {
  return s.find(' ') == std::string::npos ? s : "(" + s + ")";
}

/// a x| b, dropping trivial b.
inline std::string semidirect(const std::string& a, u64 b) {
  return b == 1 ? a : paren(a) + " ⋊ " + cyc(b);
}

inline std::string direct(const std::string& a, const std::string& b) {
  return paren(a) + " × " + paren(b);
}

}  // namespace hgspq::detail
