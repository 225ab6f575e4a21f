#include "pirlab/foasc/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace pirlab::foasc {

void ParamReport::set(const std::string& key, std::string value) {
  for (auto& [k, v] : entries_) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  entries_.emplace_back(key, std::move(value));
}

const std::string* ParamReport::get(const std::string& key) const {
  for (const auto& [k, v] : entries_) {
    if (k == key) return &v;
  }
  return nullptr;
}

std::string ParamReport::to_table() const {
  std::size_t width = 0;
  for (const auto& [k, v] : entries_) width = std::max(width, k.size());
  std::ostringstream os;
  for (const auto& [k, v] : entries_) os << "  " << k << std::string(width - k.size() + 2, ' ') << v << '\n';
  return os.str();
}

std::string ParamReport::to_kv() const {
  std::ostringstream os;
  for (const auto& [k, v] : entries_) os << k << " = " << v << '\n';
  return os.str();
}

std::string format_bits(double bits) {
  char buf[64];
  if (std::abs(bits - std::round(bits)) < 1e-9) {
    std::snprintf(buf, sizeof buf, "%.0f", std::round(bits));
  } else {
    std::snprintf(buf, sizeof buf, "%.6f", bits);
  }
  return buf;
}

}  // namespace pirlab::foasc
