#pragma once

// Plain-text code files: a header line "m=<length>" followed by one
// codeword per line in 0/1 form. Writers emit canonical order; readers
// accept any order and deduplicate.

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "nrcheck/code.hpp"

namespace nrcheck {

class CodeFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Code read_code(std::istream& in);
Code read_code_file(const std::string& path);

void write_code(std::ostream& out, const Code& code);
void write_code_file(const std::string& path, const Code& code);

}  // namespace nrcheck
