#include <doctest.h>

#include <map>
#include <sstream>

#include "nrcheck/code_io.hpp"
#include "nrcheck/construct.hpp"
#include "nrcheck/kernel.hpp"
#include "oracles.hpp"

using namespace nrcheck;

namespace {

std::vector<Word> words_of(const Code& c) { return {c.words().begin(), c.words().end()}; }

std::map<int, std::size_t> weights_of(const std::vector<Word>& words) {
  std::map<int, std::size_t> h;
  for (Word w : words) ++h[std::popcount(w)];
  return h;
}

const Code& nr() {
  static const Code c = nordstrom_robinson();
  return c;
}

}  // namespace

TEST_SUITE("construct") {

TEST_CASE("code canonicalizes") {
  const Code c(3, {0b110, 0b000, 0b110});
  CHECK(c.size() == 2);
  CHECK(c.words()[0] == 0);
  CHECK(c.min_distance() == 2);
  CHECK(c.contains(Vertex::parse("011")));
  CHECK_FALSE(c.contains(Word{0b001}));
  CHECK_FALSE(Code(3, {0b1}).min_distance().has_value());
  CHECK_THROWS_AS(Code(3, {0b1000}), std::invalid_argument);
}

TEST_CASE("golay code") {
  const Code g = golay24();
  CHECK(g.length() == 24);
  CHECK(g.size() == 4096);
  CHECK(g.contains(Word{0}));
  CHECK(g.contains(Vertex::from_support(24, {1, 2, 3, 4, 5, 6, 7, 8})));
  CHECK(g.min_distance() == 8);
  CHECK(code_predicates(g).is_linear);
}

TEST_CASE("golay min distance by exhaustive pairs") {
  const Code g = golay24();
  CHECK(oracle::min_distance(words_of(g)) == 8);
}

TEST_CASE("golay weights match an independently built Golay code") {
  const auto expected = weights_of(oracle::golay_by_span());
  CHECK(expected == std::map<int, std::size_t>{{0, 1}, {8, 759}, {12, 2576}, {16, 759}, {24, 1}});
  CHECK(weights_of(words_of(golay24())) == expected);
}

TEST_CASE("coset decomposition") {
  const CosetDecomposition dec = coset_decomposition(golay24());
  CHECK(dec.subcode.size() == 32);
  CHECK(dec.subcode.contains(Word{0}));
  for (Word w : dec.subcode.words()) CHECK((w & 0xFFu) == 0);
  for (int i = 1; i <= 7; ++i) {
    const Vertex& rep = dec.representatives[static_cast<std::size_t>(i - 1)];
    CHECK((rep.bits() & 0xFFu) == ((1u << (i - 1)) | 0x80u));
    const Code& coset = dec.cosets[static_cast<std::size_t>(i)];
    CHECK(coset.size() == 32);
    // Every Golay word with that prefix lies in the coset.
    std::size_t with_prefix = 0;
    for (Word w : dec.golay.words()) {
      if ((w & 0xFFu) == (rep.bits() & 0xFFu)) {
        ++with_prefix;
        CHECK(coset.contains(w));
      }
    }
    CHECK(with_prefix == 32);
  }
  CHECK_THROWS_AS(coset_decomposition(Code(24, {0})), std::runtime_error);
}

TEST_CASE("projection") {
  const Code c(3, {0b000, 0b111});
  CHECK(project(c, ProjectionSpec(3, {1, 2, 3})) == c);
  CHECK(project(c, ProjectionSpec(3, {1, 2})) == Code(2, {0b00, 0b11}));
  const CosetDecomposition dec = coset_decomposition(golay24());
  CHECK(project(dec.subcode, CosetDecomposition::inner()).size() == 32);
  CHECK_THROWS_AS(ProjectionSpec(3, {4}), std::invalid_argument);
  CHECK_THROWS_AS(ProjectionSpec(3, {1, 1}), std::invalid_argument);
}

TEST_CASE("nordstrom-robinson code") {
  const Code& c = nr();
  CHECK(c.length() == 16);
  CHECK(c.size() == 256);
  CHECK(c.min_distance() == 6);
  CHECK(oracle::min_distance(words_of(c)) == 6);
  CHECK(c.contains(Word{0}));
  for (Word w : c.words()) CHECK(std::popcount(w) % 2 == 0);
  CHECK(c.weight_class(6).size() == 112);
  CHECK(c.weight_class(8).size() == 30);
  CHECK(c.weight_class(10).size() == 112);
  const CodePredicates p = code_predicates(c);
  CHECK(p.is_antipodal);
  CHECK_FALSE(p.is_linear);
  CHECK(p.is_even);
}

TEST_CASE("nr is independent of the representative choice") {
  const Code g = golay24();
  const CosetDecomposition least = coset_decomposition(g, RepresentativeRule::least);
  const CosetDecomposition greatest = coset_decomposition(g, RepresentativeRule::greatest);
  CHECK(least.representatives != greatest.representatives);
  CHECK(nordstrom_robinson(least) == nordstrom_robinson(greatest));
}

TEST_CASE("reed-muller subcode") {
  const Code r = reed_muller_subcode();
  CHECK(r.size() == 32);
  CHECK(r.min_distance() == 8);
  CHECK(code_predicates(r).is_linear);
  for (Word w : r.words()) CHECK(nr().contains(w));
}

TEST_CASE("puncture") {
  const Code pn = puncture(nr(), 1);
  CHECK(pn.length() == 15);
  CHECK(pn.size() == 256);
  CHECK(pn.min_distance() == 5);
  CHECK(pn.weight_class(5).size() == 42);
  CHECK(puncture(Code(2, {0b00, 0b11}), 1) == Code(1, {0, 1}));
  CHECK_THROWS_AS(puncture(nr(), 0), std::out_of_range);
  CHECK_THROWS_AS(puncture(nr(), 17), std::out_of_range);
}

TEST_CASE("translate") {
  const Code r = reed_muller_subcode();
  CHECK(translate(nr(), Vertex::zero(16)) == nr());
  for (Word c : r.words()) CHECK(translate(r, Vertex(16, c)) == r);
  for (Word b : nr().words()) {
    if (!r.contains(b)) CHECK(translate(nr(), Vertex(16, b)) != nr());
  }
  CHECK_THROWS_AS(translate(nr(), Vertex::zero(15)), std::invalid_argument);
}

TEST_CASE("predicates on small codes") {
  const CodePredicates p = code_predicates(Code(3, {0b000, 0b011}));
  CHECK_FALSE(p.is_antipodal);
  CHECK(p.is_linear);
  CHECK(p.weight_histogram == std::vector<std::size_t>{1, 0, 1, 0});
}

TEST_CASE("kernel") {
  CHECK(translation_kernel(nr()) == reed_muller_subcode());
  CHECK(translation_kernel(puncture(nr(), 1)).size() == 32);
  const Code lin = reed_muller_subcode();
  CHECK(translation_kernel(lin) == lin);
  const auto basis = echelon_basis(lin);
  CHECK(basis.size() == 5);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Word pivot = std::bit_floor(basis[i]);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i != j) CHECK((basis[j] & pivot) == 0);
    }
  }
}

TEST_CASE("code file round trip") {
  std::stringstream buf;
  write_code(buf, nr());
  CHECK(read_code(buf) == nr());
}

TEST_CASE("code file errors") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_code(in);
  };
  CHECK(parse("m=3\n000\n\n110\n") == Code(3, {0b000, 0b011}));
  CHECK_THROWS_AS(parse("m=3\n000\n11\n"), CodeFormatError);
  CHECK_THROWS_AS(parse("m=3\n0a0\n"), CodeFormatError);
  CHECK_THROWS_AS(parse("000\n"), CodeFormatError);
  CHECK_THROWS_AS(parse("m=3\n"), CodeFormatError);
  CHECK_THROWS_AS(read_code_file("/nonexistent/code.txt"), CodeFormatError);
}

}  // TEST_SUITE
