#pragma once

// Normal form for PECTL+N: no nested N, quantified Boolean path combinations
// un-nested and only inside an N scope, path combinations in NNF.  normalize
// produces an equisatisfiable normal-form formula by renaming N subformulas
// and nested combinations with fresh propositions.

#include <map>

#include "btl/formula.hpp"

namespace btl {

struct NormalFormCertificate {
  StateId formula;
  // fresh proposition name -> the renamed subformula
  std::map<std::string, StateId> renaming;
  std::size_t input_size = 0;
  std::size_t output_size = 0;
};

bool is_normal_form(const FormulaArena& arena, StateId f);

NormalFormCertificate normalize(FormulaArena& arena, StateId f);

}  // namespace btl
