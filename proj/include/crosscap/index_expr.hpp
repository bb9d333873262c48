#pragma once

#include <map>
#include <string>
#include <string_view>

namespace crosscap {

/// Variable bindings for symbolic subscripts such as `r+5` or `p-1`.
using Bindings = std::map<std::string, long, std::less<>>;

/// Evaluates an integer expression over `+ - * / %`, parentheses and bound
/// variables. Throws SyntaxError on malformed input or unbound names.
long evalIndexExpr(std::string_view text, const Bindings& vars);

}  // namespace crosscap
