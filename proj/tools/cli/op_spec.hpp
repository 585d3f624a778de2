#pragma once

// Operator grammar for `qfock act`:
//   x+ i=1 n=-1 [r=2]     divided power of a vertex-operator mode
//   x- i=1 n=0  [r=1]
//   h  i=1 k=-2           Heisenberg generator h_{i,k}
//   ht i=1 k=2            integral form h~_{i,k}
//   K  i=1 [p=-1]         torus elements; D and C take only p
//   psi+ i=1 r=2          psi^+_{i,r}; psi- likewise
// Nodes are 1-based.

#include <string>
#include <string_view>

#include "qfock/fock.hpp"

namespace qfock::cli {

struct OpSpec {
  enum class Kind { XPlus, XMinus, H, HTilde, K, D, C, PsiPlus, PsiMinus };
  Kind kind = Kind::XPlus;
  int node = 0;  // 0-based
  int n = 0;
  int r = 1;
  int k = 0;
  int power = 1;
  std::string text;
};

/// Throws ParseError with the offset of the offending token.
OpSpec parse_op(std::string_view text, int rank);

FockQ apply_op(const RootDatum& d, const OpSpec& op, const FockQ& v);

}  // namespace qfock::cli
