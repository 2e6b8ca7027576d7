#include "nrcheck/code_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <vector>

namespace nrcheck {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

Code read_code(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw CodeFormatError("empty code file");
  line = trim(line);
  if (line.rfind("m=", 0) != 0) throw CodeFormatError("first line must be m=<length>");
  int m = 0;
  const char* begin = line.data() + 2;
  const char* end = line.data() + line.size();
  auto [ptr, ec] = std::from_chars(begin, end, m);
  if (ec != std::errc{} || ptr != end || m < 1 || m > kMaxLength) {
    throw CodeFormatError("bad length in header: " + line);
  }

  std::vector<Word> words;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    if (static_cast<int>(line.size()) != m) {
      throw CodeFormatError("line " + std::to_string(line_no) + " has length " +
                            std::to_string(line.size()) + ", expected " + std::to_string(m));
    }
    try {
      words.push_back(Vertex::parse(line).bits());
    } catch (const std::invalid_argument& e) {
      throw CodeFormatError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (words.empty()) throw CodeFormatError("code file has no codewords");
  return Code(m, std::move(words));
}

Code read_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CodeFormatError("cannot open " + path);
  return read_code(in);
}

void write_code(std::ostream& out, const Code& code) {
  out << "m=" << code.length() << '\n';
  for (Word w : code.words()) out << Vertex(code.length(), w).to_string() << '\n';
}

void write_code_file(const std::string& path, const Code& code) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_code(out, code);
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

}  // namespace nrcheck
