#pragma once

#include <span>

#include "adm/formula.hpp"

namespace adm {

// Intuitionistic propositional theoremhood, decided by proof search in the
// contraction-free sequent calculus G4ip (Dyckhoff). Terminates on every
// input without loop checking.
bool is_theorem(const Formula& f);

// Gamma |-_Int b, reduced to is_theorem(big_and(Gamma) -> b).
bool proves(std::span<const Formula> gamma, const Formula& b);

// Both directions of the biconditional are theorems.
bool equivalent(const Formula& a, const Formula& b);

}  // namespace adm
