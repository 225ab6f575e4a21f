#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pirlab/foasc/instance.hpp"

namespace pirlab {

using Params = std::map<std::string, std::string>;

struct BuiltInstance {
  foasc::InstancePtr inst;
  double predicted_bits = 0;    // closed-form cost with the resolved parameters
  std::string formula;          // the closed form, as text
  std::vector<std::pair<std::string, std::string>> provenance;  // how ingredients were obtained
};

// Registered names, in display order.
const std::vector<std::string>& protocol_names();

// Builds a desk instance. Missing keys take the protocol's defaults; unknown protocol or
// invalid parameters throw ParamError.
BuiltInstance build_instance(const std::string& protocol, const Params& params);

// Keys each protocol reads; used by the CLI to validate flags.
std::vector<std::string> protocol_keys(const std::string& protocol);

}  // namespace pirlab
