#pragma once

#include <ostream>

#include "json.hpp"

namespace qfock::cli {

using Json = nlohmann::ordered_json;

// Writes one record per line: compact JSON, or an aligned key/value block.
class Emitter {
 public:
  Emitter(std::ostream& out, bool human) : out_(out), human_(human) {}
  void emit(const Json& record);

 private:
  std::ostream& out_;
  bool human_;
};

}  // namespace qfock::cli
