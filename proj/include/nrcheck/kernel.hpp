#pragma once

#include <vector>

#include "nrcheck/code.hpp"

namespace nrcheck {

/// {beta : C + beta = C}. Always a linear code; when 0 is in C it is a
/// subcode of C.
Code translation_kernel(const Code& code);

/// Reduced row-echelon basis of a linear code: each basis word owns a pivot
/// bit (its highest set bit) that no other basis word contains.
std::vector<Word> echelon_basis(const Code& linear);

}  // namespace nrcheck
