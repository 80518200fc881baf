#pragma once

#include <optional>
#include <string_view>

#include "tropval/polynomial.hpp"
#include "tropval/presentation.hpp"

namespace tropval {

/// `ring <ident>+ ;`
Ring parse_ring(std::string_view text);

/// Expression over + - * / ^, parentheses, integer literals and ring
/// variables. Division is allowed only by nonzero constants.
Polynomial parse_poly(const Ring& ring, std::string_view text);

/// Contents of a presentation file:
///
///   # comment
///   ring x y z;
///   ideal x + y + 1, x*y - 1;
///   weight 1 0 1/2;
///   coeffval trivial;        # or: coeffval tadic t -1;
struct PresentationFile {
  Presentation presentation;
  std::optional<WeightVector> weight;
};

PresentationFile parse_presentation(std::string_view text);

/// `trivial` or `tadic <var> <rational>` (without keyword and semicolon).
CoeffValuation parse_coeffval(const RingContext& ring, std::string_view text);

}  // namespace tropval
