#include "nrcheck/kernel.hpp"

#include <algorithm>
#include <bit>

namespace nrcheck {

Code translation_kernel(const Code& code) {
  if (code.empty()) return Code(code.length(), {});
  // beta fixes C only if c0 + beta lands in C, so candidates are c0 + C.
  const Word c0 = code.words().front();
  std::vector<Word> kernel;
  for (Word c : code.words()) {
    const Word beta = c0 ^ c;
    const bool fixes = std::all_of(code.words().begin(), code.words().end(),
                                   [&](Word w) { return code.contains(w ^ beta); });
    if (fixes) kernel.push_back(beta);
  }
  return Code(code.length(), std::move(kernel));
}

std::vector<Word> echelon_basis(const Code& linear) {
  std::vector<Word> basis;
  for (Word w : linear.words()) {
    for (Word b : basis) {
      const Word pivot = std::bit_floor(b);
      if (w & pivot) w ^= b;
    }
    if (w == 0) continue;
    const Word pivot = std::bit_floor(w);
    for (Word& b : basis) {
      if (b & pivot) b ^= w;
    }
    basis.push_back(w);
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

}  // namespace nrcheck
