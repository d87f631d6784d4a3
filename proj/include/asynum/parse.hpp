#pragma once

#include <string>

#include "asynum/pointset.hpp"
#include "asynum/series.hpp"

namespace asynum {

/// Set expressions:
///   expr    := inter (('|' | '\') inter)*
///   inter   := prod ('&' prod)*
///   prod    := atom ('*' atom)*
///   atom    := finite{(..),..} | finite<k>{} | range(a,b) | ap(a,d) | N
///            | lift((..), expr) | '(' expr ')'
/// Errors are ParseError with the byte offset and the tokens expected there.
PointSetExpr parse_expr(const std::string& text);

/// Series: `3 + 2*S[ap(0,2)] - S[range(0,9) * ap(1,2)]`.
SeriesExpr parse_series(const std::string& text);

}  // namespace asynum
