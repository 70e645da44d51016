#include <gtest/gtest.h>

#include <filesystem>

#include "fixtures.hpp"
#include "sumess/corpus.hpp"
#include "sumess/error.hpp"
#include "sumess/lattice.hpp"

using namespace sumess;

namespace {

std::size_t partition_count(std::uint32_t e) {
  std::vector<std::size_t> p(e + 1, 0);
  p[0] = 1;
  for (std::uint32_t part = 1; part <= e; ++part)
    for (std::uint32_t s = part; s <= e; ++s) p[s] += p[s - part];
  return p[e];
}

// Number of abelian groups of order n: product of partition numbers.
std::size_t abelian_count(std::uint32_t n) {
  std::size_t count = 1;
  for (std::uint32_t p = 2; n > 1; ++p) {
    std::uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    count *= partition_count(e);
  }
  return count;
}

CorpusSpec corpus_spec(std::uint32_t max_order, std::uint32_t elementary, bool matrix) {
  CorpusSpec spec;
  spec.max_order = max_order;
  spec.include_elementary_abelian_up_to = elementary;
  spec.include_matrix_instance = matrix;
  return spec;
}

}  // namespace

TEST(Corpus, CountsMatchPartitionNumbers) {
  for (std::uint32_t n = 2; n <= 64; ++n) EXPECT_EQ(abelian_groups_of_order(n).size(), abelian_count(n)) << n;
}

TEST(Corpus, OrderAndNames) {
  const auto g = abelian_groups_of_order(8);
  ASSERT_EQ(g.size(), 3u);
  EXPECT_EQ(g[0].name, "Z8");
  EXPECT_EQ(g[1].name, "Z4+Z2");
  EXPECT_EQ(g[2].name, "Z2+Z2+Z2");
  const auto h = abelian_groups_of_order(36);
  EXPECT_EQ(h.front().name, "Z4+Z9");
  EXPECT_EQ(h.back().name, "Z2+Z2+Z3+Z3");
}

TEST(Corpus, OneRepresentativePerIsomorphismClass) {
  // Pairwise non-isomorphic: embed both groups in their direct sum and test
  // the summands for isomorphism.
  for (std::uint32_t n : {4u, 8u, 9u, 12u, 16u}) {
    const auto groups = abelian_groups_of_order(n);
    for (std::size_t i = 0; i < groups.size(); ++i)
      for (std::size_t j = i + 1; j < groups.size(); ++j) {
        auto moduli = groups[i].moduli;
        moduli.insert(moduli.end(), groups[j].moduli.begin(), groups[j].moduli.end());
        const auto m = FiniteModule::build(fixtures::zmod(moduli), Caps{.elements = 1024});
        std::vector<Element> left, right;
        for (std::size_t k = 0; k < moduli.size(); ++k) {
          std::vector<std::int64_t> c(moduli.size(), 0);
          c[k] = 1;
          (k < groups[i].moduli.size() ? left : right).push_back(m.encode(c));
        }
        EXPECT_FALSE(m.is_isomorphic(m.generated_by(left), m.generated_by(right)))
            << groups[i].name << " vs " << groups[j].name;
      }
  }
}

TEST(Corpus, DefaultContents) {
  const auto items = enumerate_corpus(CorpusSpec{});
  std::size_t expected = 0;
  for (std::uint32_t n = 2; n <= 36; ++n) expected += abelian_count(n);
  EXPECT_EQ(items.size(), expected + 1);
  EXPECT_EQ(items.back().name, "M2(F2)");
  EXPECT_THROW(enumerate_corpus(corpus_spec(3, 32, true)), std::invalid_argument);
}

TEST(Corpus, ElementaryExtension) {
  CorpusSpec spec;
  spec.max_order = 4;
  spec.include_elementary_abelian_up_to = 27;
  spec.include_matrix_instance = false;
  std::vector<std::string> names;
  for (const auto& p : enumerate_corpus(spec)) names.push_back(p.name);
  EXPECT_EQ(names.front(), "Z2");
  EXPECT_NE(std::find(names.begin(), names.end(), "Z3+Z3+Z3"), names.end());
  EXPECT_NE(std::find(names.begin(), names.end(), "Z5+Z5"), names.end());
  EXPECT_EQ(std::find(names.begin(), names.end(), "Z2+Z2+Z2+Z2+Z2"), names.end());
  EXPECT_EQ(std::set<std::string>(names.begin(), names.end()).size(), names.size());
}

TEST(Corpus, SmallRunSkipsSimpleModules) {
  const auto items = enumerate_corpus(corpus_spec(4, 0, false));
  const auto results = run_corpus(items, {"all"}, Caps{});
  ASSERT_EQ(results.size(), 4u);
  EXPECT_TRUE(results[0].skipped.has_value());
  EXPECT_TRUE(results[1].skipped.has_value());
  EXPECT_FALSE(results[2].skipped.has_value());
  EXPECT_EQ(results[2].name, "Z4");
  EXPECT_EQ(results[3].name, "Z2+Z2");
  EXPECT_EQ(summarize(results).failed, 0u);
}

TEST(Corpus, CapExceededIsRecorded) {
  Caps caps;
  caps.elements = 8;
  const auto results = run_corpus({fixtures::zmod({4, 4})}, {"all"}, caps);
  EXPECT_TRUE(results[0].cap_exceeded);
  EXPECT_EQ(summarize(results).cap_exceeded, 1u);
}

TEST(Corpus, CsvFormat) {
  const auto results = run_corpus({fixtures::zmod({2, 3})}, {"thm-3.7", "thm-3.11"}, Caps{});
  const std::string csv = corpus_csv(results);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "module,order,theorem_id,applicable,pass,witness");
  EXPECT_NE(csv.find("Z2+Z3,6,thm-3.7,true,true,\n"), std::string::npos);
  EXPECT_NE(csv.find("Z2+Z3,6,thm-3.11,true,true,\n"), std::string::npos);
}

TEST(Corpus, CsvQuotesFieldsWhenNeeded) {
  auto p = fixtures::zmod({4});
  p.name = "Z4, \"cyclic\"";
  const auto results = run_corpus({p}, {"thm-3.11"}, Caps{});
  EXPECT_NE(corpus_csv(results).find(
                "\"Z4, \"\"cyclic\"\"\",4,thm-3.11,false,false,inapplicable: N(M) is empty (M is uniform)\n"),
            std::string::npos);
}

TEST(Corpus, ParallelRunMatchesSerial) {
  const auto items = enumerate_corpus(corpus_spec(24, 32, true));
  const auto serial = run_corpus(items, {"all"}, Caps{}, 1);
  const auto parallel = run_corpus(items, {"all"}, Caps{}, 4);
  EXPECT_EQ(corpus_csv(serial), corpus_csv(parallel));
  for (std::size_t i = 0; i < serial.size(); ++i) EXPECT_EQ(serial[i].dot_s, parallel[i].dot_s);
}

TEST(Corpus, UnknownIdRejectedUpFront) {
  EXPECT_THROW(run_corpus({fixtures::zmod({4})}, {"bogus"}, Caps{}), UnknownTheoremId);
}

TEST(Corpus, FileStem) {
  EXPECT_EQ(file_stem("Z8+Z2"), "Z8+Z2");
  EXPECT_EQ(file_stem("M2(F2)"), "M2_F2_");
}
