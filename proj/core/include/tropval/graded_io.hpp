#pragma once

#include <string>
#include <string_view>

#include "tropval/graded.hpp"

namespace tropval {

// Text form of a graded algebra:
//
//   # comment
//   monoid dim 2;
//   truncation 4 weights 1 1;          (optional; default weights 1, bound = top degree)
//   component 1,0 size 1;
//   label (1,0,0) x;                   (optional display name of a basis vector)
//   mult (1,0,0)*(0,1,0) = 1*(1,1,0);  (tuples end with the basis index)
//
// Products not listed are zero.

GradedAlgebraSpec parse_graded_spec(std::string_view text);
GradedAlgebra parse_graded_algebra(std::string_view text);
std::string format_graded_algebra(const GradedAlgebra& A);

/// "x*y + x*z", "2*(1,1,0) - (0,0,0)" and mixtures; labels take priority.
Element parse_element(const GradedAlgebra& A, std::string_view text);

/// Rows separated by '|', entries by whitespace: "0 0 1 0 0 | 1 1 0 1 1".
LexFunctional parse_lex_functional(std::string_view text, std::size_t dim);

}  // namespace tropval
