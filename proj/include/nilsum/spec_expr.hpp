#pragma once

#include "nilsum/constructions.hpp"

#include <optional>
#include <string>

namespace nilsum {

/// Parse failure with the offending position in the expression.
class SpecParseError : public std::runtime_error {
public:
  SpecParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), pos_(pos) {}
  size_t position() const { return pos_; }

private:
  size_t pos_;
};

/// A parsed construction expression. `normalized` is the canonical spelling;
/// parsing it again yields the same construction (round-trip identity).
struct ParsedAlgebra {
  LieAlgebra algebra;
  std::optional<GradedAlgebra> graded;
  std::optional<GradedSum> graded_sum;
  std::string normalized;
};

/// Construction expressions addressable from the command line:
///   sl2:p=7                      zassenhaus:p=5,n=1
///   witt:p=3,m=2                 abelian:p=5,dim=3
///   heisenberg:p=5               uppertriangular:p=7,n=3
///   stricttriangular:p=7,n=3     semidirect:two_dim_nonabelian,p=3
///   semidirect:heisenberg_weyl,p=5
///   tensor:S=zassenhaus(5,1),m=1
///   G:S=zassenhaus(5,1),m=1,D=span(d1)
/// Derivation tokens in span(...): d1, x1d1, x1^2d2, x1x2d1, ...
ParsedAlgebra parse_algebra_spec(const std::string& spec);

} // namespace nilsum
