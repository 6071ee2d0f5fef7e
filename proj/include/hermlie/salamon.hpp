#pragma once

#include "hermlie/lie_algebra.hpp"

#include <map>
#include <string>

namespace hermlie {

using Bindings = std::map<std::string, Scalar>;

/// Replaces the Unicode minus and the Greek letters used in family names
/// (alpha, beta, gamma, delta, lambda, mu) with ASCII.
std::string ascii_transliterate(const std::string& text);

/// Parses differential notation such as "(0,21,-15+2.(35+46))".
/// Entry i is de^i with de^i(e_j, e_k) = -e^i([e_j, e_k]); a pair "jk" is
/// e^j ^ e^k.  Coefficients are integers, p/q literals or names from
/// `bindings`.  Error positions are byte offsets into the original text.
/// Throws SyntaxError, UnboundParameter or JacobiFailed.
LieAlgebra parse_salamon(const std::string& text, const Bindings& bindings = {});

/// Inverse of parse_salamon with ascending pairs; a lone negative term is
/// written as the reversed pair ("21" for -e^{12}).
std::string render_salamon(const LieAlgebra& lie);

}  // namespace hermlie
