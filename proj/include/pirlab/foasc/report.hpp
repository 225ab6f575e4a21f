#pragma once

#include <string>
#include <utility>
#include <vector>

namespace pirlab::foasc {

// Ordered key/value parameter report; keys are unique.
class ParamReport {
 public:
  void set(const std::string& key, std::string value);
  template <class T>
  void set(const std::string& key, const T& value) {
    set(key, std::to_string(value));
  }
  void set(const std::string& key, const char* value) { set(key, std::string(value)); }

  const std::string* get(const std::string& key) const;
  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

  std::string to_table() const;
  // One "key = value" line per entry.
  std::string to_kv() const;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

std::string format_bits(double bits);

}  // namespace pirlab::foasc
