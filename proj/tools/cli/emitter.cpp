#include "emitter.hpp"

#include <algorithm>
#include <iomanip>

namespace qfock::cli {

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

void Emitter::emit(const Json& record) {
  if (!human_) {
    out_ << record.dump() << '\n';
    return;
  }
  std::size_t width = 0;
  for (const auto& [key, value] : record.items()) {
    if (key != "record") width = std::max(width, key.size());
  }
  out_ << "[" << (record.contains("record") ? scalar_text(record["record"]) : std::string("?")) << "]\n";
  for (const auto& [key, value] : record.items()) {
    if (key == "record") continue;
    out_ << "  " << std::left << std::setw(static_cast<int>(width)) << key << "  " << scalar_text(value) << '\n';
  }
}

}  // namespace qfock::cli
