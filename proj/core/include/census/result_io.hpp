#pragma once

#include <string>

#include "census/pipeline.hpp"

namespace census {

/// {genus, rank, degree_class, polynomial_kind, polynomial, flags, provenance}.
/// polynomial is SparsePoly JSON when the value is a Laurent polynomial and
/// FactoredRat JSON otherwise.
std::string result_to_json(const KacResult& r, int indent = -1);
KacResult result_from_json(const std::string& text);

/// LaTeX with full products ∏(1 ± α_i) and ∏(1 ± q α_i) factored out when
/// they divide; the cofactor is written out term by term.
std::string to_latex(const FactoredRat& f, int genus);
std::string to_latex(const SparsePoly& p);
/// Plain text; α_{2i-1}^{-1} q is written α_{2i}.
std::string to_text(const FactoredRat& f);
std::string to_text(const SparsePoly& p);

}  // namespace census
