#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "emitter.hpp"

namespace qfock::cli {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed --op or --state text; the message carries the position.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string type;
  int rank = 0;
  int l = 0;  // 0: generic q
  std::optional<int> depth;
  std::optional<int> rmax;
  std::optional<int> smax;
  std::optional<int> nmax;
  std::optional<int> range;
  std::optional<int> degree;
  std::optional<int> lmax;
  std::vector<std::string> ops;
  std::string state;
  std::string suite;
  std::string action;
};

// Each returns the process exit status: 0 all checks pass, 1 a check failed.
int cmd_rootdata(const RunConfig& cfg, Emitter& out);
int cmd_act(const RunConfig& cfg, Emitter& out);
int cmd_character(const RunConfig& cfg, Emitter& out);
int cmd_verify(const RunConfig& cfg, Emitter& out);
int cmd_rootofunity(const RunConfig& cfg, Emitter& out);

}  // namespace qfock::cli
