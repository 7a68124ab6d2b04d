#include <doctest.h>

#include <algorithm>
#include <memory>
#include <set>

#include "ncv/list_decode.hpp"
#include "ncv/rng.hpp"
#include "support.hpp"

using ncv::Rng;
using ncv::gf::Field;
using ncv::listdec::BruteForceOracle;
using ncv::listdec::CandidateList;
using ncv::listdec::ListDecodeParams;
using ncv::rs::Code;
using ncv::rs::Vec;

namespace {

bool same_sets(const CandidateList& a, const CandidateList& b) {
  return !a.truncated && !b.truncated && a.patterns == b.patterns;
}

// Two distinct patterns with equal syndromes: split a minimum-weight (11)
// codeword's support 6 + 5. Both land inside radius 6.
std::pair<Vec, Vec> colliding_pair(const Code& code, Rng& rng) {
  const auto cw = testsup::random_codeword_of_weight(code, 11, rng);
  REQUIRE(cw.has_value());
  Vec e1(code.n(), 0), e2(code.n(), 0);
  unsigned seen = 0;
  for (unsigned j = 0; j < code.n(); ++j) {
    if ((*cw)[j] == 0) continue;
    (seen < 6 ? e1 : e2)[j] = (*cw)[j];
    ++seen;
  }
  REQUIRE(ncv::rs::weight(e1) == 6);
  REQUIRE(ncv::rs::weight(e2) == 5);
  REQUIRE(ncv::rs::syndrome(e1, code) == ncv::rs::syndrome(e2, code));
  return {e1, e2};
}

}  // namespace

TEST_SUITE("list_decode") {

TEST_CASE("maximum interpolation radius") {
  CHECK(ncv::listdec::gs_max_radius(15, 5) == 6);
  CHECK(ncv::listdec::gs_max_radius(15, 9) == 3);
  CHECK(ncv::listdec::gs_max_radius(63, 28) == 21);
  CHECK(ncv::listdec::gs_max_radius(255, 112) == 86);
  CHECK(ncv::listdec::gs_max_radius(12, 3) == 6);  // ceil(sqrt(36)) = 6
}

TEST_CASE("automatic multiplicity choices") {
  CHECK(ncv::listdec::choose_multiplicity(15, 5, 6, 64) == 2);
  CHECK(ncv::listdec::choose_multiplicity(63, 28, 21, 64) == 10);
  CHECK(ncv::listdec::choose_multiplicity(255, 112, 86, 64) == 38);
  CHECK_THROWS_AS(ncv::listdec::choose_multiplicity(255, 112, 86, 10),
                  std::invalid_argument);
}

TEST_CASE("syndrome_to_word produces a preimage with the forced zeros") {
  const auto f4 = std::make_shared<const Field>(4);
  const Code code(15, 5, f4);
  Rng rng(0x60);
  for (int i = 0; i < 50; ++i) {
    Vec synd(code.redundancy());
    for (auto& s : synd) s = rng.symbol(*f4);
    const Vec y = ncv::listdec::syndrome_to_word(synd, code);
    CHECK(ncv::rs::syndrome(y, code) == synd);
    for (unsigned j = code.n() - code.k(); j < code.n(); ++j) CHECK(y[j] == 0);

    const std::vector<unsigned> zeros{0, 3, 4, 9, 14};
    const Vec y2 = ncv::listdec::syndrome_to_word(synd, code, zeros);
    CHECK(ncv::rs::syndrome(y2, code) == synd);
    for (unsigned z : zeros) CHECK(y2[z] == 0);
  }
  const Vec synd(code.redundancy(), 1);
  CHECK_THROWS_AS(ncv::listdec::syndrome_to_word(synd, code, {0, 1, 2}),
                  std::invalid_argument);  // must name exactly k positions
  CHECK_THROWS_AS(ncv::listdec::syndrome_to_word(synd, code, {0, 0, 1, 2, 3}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ncv::listdec::syndrome_to_word(synd, code, {0, 1, 2, 3, 15}),
                  std::invalid_argument);
}

TEST_CASE("interpolation list equals brute force on the full radius") {
  const auto f4 = std::make_shared<const Field>(4);
  const Code code(15, 5, f4);
  const BruteForceOracle oracle(code);
  CHECK(oracle.codeword_count() == 1048576);  // 16^5
  ListDecodeParams lp;
  lp.radius = 6;
  lp.max_list = 4096;
  Rng rng(0x61);
  for (int i = 0; i < 25; ++i) {
    const Vec e = testsup::random_pattern(rng, *f4, 15, rng.below(7));
    const auto synd = ncv::rs::syndrome(e, code);
    const auto got = ncv::listdec::list_error_patterns(synd, code, lp);
    CHECK(same_sets(got, oracle.list(synd, 6)));
    CHECK(std::find(got.patterns.begin(), got.patterns.end(), e) != got.patterns.end());
  }
  for (int i = 0; i < 25; ++i) {
    Vec synd(code.redundancy());
    for (auto& s : synd) s = rng.symbol(*f4);
    const auto got = ncv::listdec::list_error_patterns(synd, code, lp);
    CHECK(same_sets(got, oracle.list(synd, 6)));
    for (const Vec& p : got.patterns) {  // soundness of every answer
      CHECK(ncv::rs::weight(p) <= 6);
      CHECK(ncv::rs::syndrome(p, code) == synd);
    }
  }
}

TEST_CASE("shortened codes list correctly at the parent length") {
  const auto f4 = std::make_shared<const Field>(4);
  const Code code(12, 3, f4);
  const BruteForceOracle oracle(code);
  CHECK(oracle.codeword_count() == 4096);  // 16^3
  ListDecodeParams lp;
  lp.radius = 6;
  lp.max_list = 4096;
  Rng rng(0x62);
  for (int i = 0; i < 40; ++i) {
    const Vec e = testsup::random_pattern(rng, *f4, 12, rng.below(7));
    const auto synd = ncv::rs::syndrome(e, code);
    const auto got = ncv::listdec::list_error_patterns(synd, code, lp);
    CHECK(same_sets(got, oracle.list(synd, 6)));
    for (const Vec& p : got.patterns) CHECK(p.size() == 12);
  }
}

TEST_CASE("lists are sorted and duplicate-free") {
  const auto f4 = std::make_shared<const Field>(4);
  const Code code(15, 5, f4);
  ListDecodeParams lp;
  lp.radius = 6;
  lp.max_list = 4096;
  Rng rng(0x63);
  for (int i = 0; i < 20; ++i) {
    Vec synd(code.redundancy());
    for (auto& s : synd) s = rng.symbol(*f4);
    const auto got = ncv::listdec::list_error_patterns(synd, code, lp);
    CHECK(std::is_sorted(got.patterns.begin(), got.patterns.end()));
    CHECK(std::adjacent_find(got.patterns.begin(), got.patterns.end()) ==
          got.patterns.end());
  }
}

TEST_CASE("inside the unique radius the list pins down the unique decoder") {
  const auto f4 = std::make_shared<const Field>(4);
  const Code code(15, 5, f4);
  ListDecodeParams lp;
  lp.radius = 6;
  lp.max_list = 4096;
  Rng rng(0x64);
  for (int i = 0; i < 40; ++i) {
    const Vec e = testsup::random_pattern(rng, *f4, 15, rng.below(6));  // wt <= t0
    const auto synd = ncv::rs::syndrome(e, code);
    const auto got = ncv::listdec::list_error_patterns(synd, code, lp);
    const auto uniq = ncv::rs::bma_error_decode(synd, code);
    REQUIRE(uniq.has_value());
    CHECK(*uniq == e);
    // e is the strictly lightest element; everything else sits above t0.
    unsigned at_or_below_t0 = 0;
    for (const Vec& p : got.patterns)
      if (ncv::rs::weight(p) <= code.t0()) ++at_or_below_t0;
    CHECK(at_or_below_t0 == 1);
    CHECK(std::find(got.patterns.begin(), got.patterns.end(), e) != got.patterns.end());
  }
}

TEST_CASE("multiple candidates and truncation") {
  const auto f4 = std::make_shared<const Field>(4);
  const Code code(15, 5, f4);
  Rng rng(0x65);
  const auto [e1, e2] = colliding_pair(code, rng);
  const auto synd = ncv::rs::syndrome(e1, code);

  ListDecodeParams lp;
  lp.radius = 6;
  lp.max_list = 64;
  const auto full = ncv::listdec::list_error_patterns(synd, code, lp);
  CHECK_FALSE(full.truncated);
  CHECK(full.patterns.size() >= 2);
  CHECK(std::find(full.patterns.begin(), full.patterns.end(), e1) != full.patterns.end());
  CHECK(std::find(full.patterns.begin(), full.patterns.end(), e2) != full.patterns.end());

  lp.max_list = 1;
  const auto cut = ncv::listdec::list_error_patterns(synd, code, lp);
  CHECK(cut.truncated);
  CHECK(cut.patterns.size() == 1);
  CHECK(cut.patterns[0] == full.patterns[0]);  // lexicographic prefix
}

TEST_CASE("explicit multiplicity above the automatic choice changes nothing") {
  const auto f4 = std::make_shared<const Field>(4);
  const Code code(15, 5, f4);
  Rng rng(0x66);
  ListDecodeParams auto_lp, manual_lp;
  auto_lp.radius = manual_lp.radius = 6;
  auto_lp.max_list = manual_lp.max_list = 4096;
  manual_lp.multiplicity = 3;  // auto picks 2
  for (int i = 0; i < 10; ++i) {
    Vec synd(code.redundancy());
    for (auto& s : synd) s = rng.symbol(*f4);
    const auto a = ncv::listdec::list_error_patterns(synd, code, auto_lp);
    const auto b = ncv::listdec::list_error_patterns(synd, code, manual_lp);
    CHECK(same_sets(a, b));
  }
}

TEST_CASE("parameter validation") {
  const auto f4 = std::make_shared<const Field>(4);
  const Code code(15, 5, f4);
  const Vec synd(code.redundancy(), 0);
  ListDecodeParams lp;
  lp.radius = 0;
  CHECK_THROWS_AS(ncv::listdec::list_error_patterns(synd, code, lp),
                  std::invalid_argument);
  lp.radius = 7;  // past gs_max_radius(15, 5)
  CHECK_THROWS_AS(ncv::listdec::list_error_patterns(synd, code, lp),
                  std::invalid_argument);
  lp.radius = 6;
  const Code b2(15, 5, f4, 2);
  CHECK_THROWS_AS(ncv::listdec::list_error_patterns(Vec(10, 0), b2, lp),
                  std::invalid_argument);  // needs evaluation form, first root 1
}

TEST_CASE("brute force guard rejects huge codeword spaces") {
  const auto f8 = std::make_shared<const Field>(8);
  const Code big(50, 20, f8);  // 256^20 codewords
  CHECK_THROWS_AS(BruteForceOracle{big}, std::invalid_argument);
}

}  // TEST_SUITE
