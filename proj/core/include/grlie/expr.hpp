#pragma once

#include <string_view>

#include "grlie/free_lie.hpp"
#include "grlie/lie_element.hpp"
#include "grlie/presentation.hpp"

namespace grlie {

/// Parses a Lie expression over the algebra's alphabet. Tokens: generator
/// names (A[1,2], a[1,1], u[1], x, ...), integer literals, '*', '+', '-', and
/// Lie bracket pairs [e1, e2]. Precedence: unary minus > '*' > '+'/'-'.
/// The result must be homogeneous; inhomogeneous sums raise
/// InhomogeneousExpressionError, unknown names raise UnknownGeneratorError,
/// and malformed input raises ParseError with the byte offset of the fault.
LieElement parse_lie_expr(std::string_view text, const FreeLieAlgebra& algebra);

/// Convenience overload; the presentation fixes the alphabet.
LieElement parse_lie_expr(std::string_view text, const GradedPresentation& presentation);

}  // namespace grlie
