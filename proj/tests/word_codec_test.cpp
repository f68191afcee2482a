#include "support.hpp"

#include "ulab/hyper/expr.hpp"
#include "ulab/words/word_codec.hpp"

#include <random>

namespace {

using namespace ulab;
using namespace ulab::words;

TEST(EncodeWord, IndexOrderCodes) {
  const auto abc = Alphabet::from_text("abc");
  EXPECT_EQ(encode_word("ab", abc).codes, (std::vector<Code>{0, 1}));
  EXPECT_EQ(encode_word("a", Alphabet::from_text("a")).codes, (std::vector<Code>{0}));
  EXPECT_EQ(encode_word("ab", abc).canonical_length(), 2U);
}

TEST(EncodeWord, Errors) {
  const auto abc = Alphabet::from_text("abc");
  EXPECT_ERRC(encode_word("abd", abc), Errc::UnknownSymbol);
  EXPECT_ERRC(encode_word("", abc), Errc::EmptyWord);
  EncodedWord subtle{{0, 7}, {{1, "tag"}}};
  EXPECT_ERRC(decode_word(subtle, abc), Errc::SubtleSymbol);
}

TEST(EncodeWord, RoundTripStandardAlphabet) {
  const auto alphabet = Alphabet::standard();
  EXPECT_EQ(decode_word(encode_word("and and", alphabet), alphabet), "and and");
  EXPECT_EQ(decode_word(encode_word("α(ν′) ζ λ ω", alphabet), alphabet), "α(ν′) ζ λ ω");
}

TEST(EncodeWord, RoundTripRandomCorpus) {
  const auto alphabet = Alphabet::standard();
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> length(1, 40);
  for (int trial = 0; trial < 500; ++trial) {
    std::string word;
    std::vector<Code> expected;
    for (int j = length(rng); j > 0; --j) {
      const auto c = pick(rng);
      word += alphabet.symbol(c);
      expected.push_back(c);
    }
    const auto encoded = encode_word(word, alphabet);
    ASSERT_EQ(encoded.codes, expected);
    ASSERT_EQ(decode_word(encoded, alphabet), word);
  }
}

TEST(Alphabet, RejectsDuplicatesAndMultiSymbolEntries) {
  EXPECT_ANY_THROW(Alphabet({"a", "a"}));
  EXPECT_ANY_THROW(Alphabet({"ab"}));
  const auto a = Alphabet::from_text("xyz");
  EXPECT_EQ(a.code("y"), Code{1});
  EXPECT_FALSE(a.code("q").has_value());
  EXPECT_TRUE(a.readable(2));
  EXPECT_FALSE(a.readable(3));
}

TEST(FrozenSegment, TailCarriesIndex) {
  const SegmentCodec codec;
  const auto seg = codec.make_frozen_segment("sun rises", 3);
  const auto text = codec.text(seg);
  EXPECT_NE(text.find("the natural number 3"), std::string::npos);
  EXPECT_EQ(text.rfind("sun rises", 0), 0U);
  EXPECT_EQ(text.back(), '.');
  EXPECT_EQ(seg.index, 3U);
  EXPECT_EQ(codec.make_frozen_segment("x", 0).index, 0U);
  EXPECT_ERRC(codec.make_frozen_segment("", 0), Errc::EmptyWord);
}

TEST(FrozenSegment, IndexSitsBeforeTerminalPeriod) {
  const SegmentCodec codec;
  const auto text = codec.text(codec.make_frozen_segment("x", 42));
  EXPECT_EQ(text.substr(text.size() - 3), "42.");
}

TEST(FrozenSegment, CustomTemplate) {
  const SegmentCodec codec(Alphabet::standard(), "at step {i}.");
  EXPECT_EQ(codec.text(codec.make_frozen_segment("go", 9)), "go at step 9.");
}

TEST(Totality, Membership) {
  const SegmentCodec codec;
  const auto seg2 = codec.make_frozen_segment("state", 2);
  EXPECT_TRUE(codec.totality_membership(seg2, 2));
  EXPECT_FALSE(codec.totality_membership(seg2, 3));
  EXPECT_FALSE(codec.totality_membership(codec.make_frozen_segment("x", 5), 4));
}

TEST(Totality, MembershipIgnoresBody) {
  const SegmentCodec codec;
  const std::vector<std::string> corpus{"x", "sun rises", "a particle moves"};
  for (std::uint64_t i = 0; i < 6; ++i)
    for (std::uint64_t j = 0; j < 6; ++j) {
      const bool expected = codec.totality_membership(codec.make_frozen_segment(corpus[0], i), j);
      for (const auto& body : corpus)
        EXPECT_EQ(codec.totality_membership(codec.make_frozen_segment(body, i), j), expected);
    }
}

TEST(Totality, PairwiseDisjoint) {
  const SegmentCodec codec;
  for (std::uint64_t k = 0; k < 30; ++k) {
    const auto seg = codec.make_frozen_segment("w", k);
    int hits = 0;
    for (std::uint64_t i = 0; i < 30; ++i) hits += codec.totality_membership(seg, i) ? 1 : 0;
    EXPECT_EQ(hits, 1);
  }
}

TEST(Totality, TamperedTailIsRejected) {
  const SegmentCodec codec;
  auto seg = codec.make_frozen_segment("x", 4);
  seg.tail = encode_word(" something else 4.", codec.alphabet());
  EXPECT_FALSE(codec.totality_membership(seg, 4));
}

TEST(Paradigm, OneSegmentPerIndex) {
  const SegmentCodec codec;
  std::map<std::uint64_t, std::string> selector;
  for (std::uint64_t i = 0; i <= 3; ++i) selector[i] = "state " + std::to_string(i);
  const auto p = codec.build_paradigm(selector, {0, 3, false});
  ASSERT_EQ(p.segments.size(), 4U);
  for (std::uint64_t i = 0; i <= 3; ++i) EXPECT_EQ(p.segments[i].index, i);
  EXPECT_EQ(p.kind, ParadigmKind::developmental);
}

TEST(Paradigm, EmptyRangeAndMissingIndex) {
  const SegmentCodec codec;
  EXPECT_ERRC(codec.build_paradigm({{0, "a"}}, IndexRange::none()), Errc::MissingIndex);
  EXPECT_ERRC(codec.build_paradigm({{0, "a"}, {2, "c"}}, {0, 2, false}), Errc::MissingIndex);
}

TEST(Paradigm, SelectorsDifferingAtOneIndex) {
  const SegmentCodec codec;
  const auto a = codec.build_paradigm({{0, "p"}, {1, "q"}, {2, "r"}}, {0, 2, false});
  const auto b = codec.build_paradigm({{0, "p"}, {1, "s"}, {2, "r"}}, {0, 2, false});
  std::vector<std::uint64_t> differing;
  for (std::size_t k = 0; k < 3; ++k)
    if (!(a.segments[k] == b.segments[k])) differing.push_back(a.segments[k].index);
  EXPECT_EQ(differing, std::vector<std::uint64_t>{1});
}

TEST(Paradigm, GeneralRejectsRepeats) {
  const SegmentCodec codec;
  const auto s = codec.make_frozen_segment("x", 1);
  EXPECT_ERRC(codec.general_paradigm({s, s}), Errc::InvalidArgument);
  EXPECT_EQ(codec.general_paradigm({s, codec.make_frozen_segment("y", 1)}).kind, ParadigmKind::general);
}

TEST(Paradigm, JsonRecord) {
  const SegmentCodec codec;
  const auto j = codec.to_json(codec.make_frozen_segment("sun", 7));
  EXPECT_EQ(j.at("index"), 7);
  EXPECT_EQ(j.at("body"), "sun");
  EXPECT_TRUE(j.at("subtle").empty());
  EXPECT_NE(j.at("tail").get<std::string>().find("number 7"), std::string::npos);
}

// independent cartesian product
std::vector<ChoiceSet> cartesian(const std::vector<std::set<std::string>>& samples) {
  std::vector<ChoiceSet> out{{}};
  for (const auto& sample : samples) {
    std::vector<ChoiceSet> next;
    for (const auto& prefix : out)
      for (const auto& x : sample) {
        auto grown = prefix;
        grown.push_back(x);
        next.push_back(grown);
      }
    out = next;
  }
  return out;
}

TEST(ChoiceSets, Examples) {
  const auto all = enumerate_choice_sets({{"a", "b"}, {"c"}}, ChoiceSelector::all());
  EXPECT_EQ(all, (std::vector<ChoiceSet>{{"a", "c"}, {"b", "c"}}));
  const auto singles = enumerate_choice_sets({{"a", "b", "c"}}, ChoiceSelector::of_size(1));
  EXPECT_EQ(singles, (std::vector<ChoiceSet>{{"a"}, {"b"}, {"c"}}));
  const auto none = enumerate_choice_sets({{"a"}}, ChoiceSelector::of_size(0));
  EXPECT_EQ(none, std::vector<ChoiceSet>{ChoiceSet{}});
  EXPECT_ERRC(enumerate_choice_sets({{"a"}, {}}, ChoiceSelector::all()), Errc::EmptySample);
}

TEST(ChoiceSets, AllMatchesCartesianOracle) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::set<std::string>> samples(1 + rng() % 4);
    for (auto& s : samples)
      for (auto k = 1 + rng() % 3; k > 0; --k) s.insert(std::string(1, static_cast<char>('a' + rng() % 6)));
    const auto got = enumerate_choice_sets(samples, ChoiceSelector::all());
    EXPECT_EQ(got, cartesian(samples));
    std::size_t product = 1;
    for (const auto& s : samples) product *= s.size();
    EXPECT_EQ(got.size(), product);
  }
}

TEST(ChoiceSets, ExactlyKCountsBinomial) {
  const std::set<std::string> sample{"a", "b", "c", "d", "e"};
  const std::size_t binomial[] = {1, 5, 10, 10, 5, 1};
  for (std::size_t k = 0; k <= 5; ++k) {
    const auto sets = enumerate_choice_sets({sample}, ChoiceSelector::of_size(k));
    EXPECT_EQ(sets.size(), binomial[k]);
    for (const auto& s : sets) EXPECT_EQ(std::set<std::string>(s.begin(), s.end()).size(), k);
  }
}

TEST(Template, NaturalSlotIsReadable) {
  const auto inst = instantiate_template(kParticleKineticTemplate, hyper::HyperReal(5));
  EXPECT_EQ(inst.rendered, "An elementary particle α(5) with kinetic energy c+1/(5).");
  EXPECT_TRUE(inst.subtle_positions.empty());
}

TEST(Template, UnlimitedSlotFlagsEachSlot) {
  const auto alphabet = Alphabet::standard();
  const auto kinetic = instantiate_template(kParticleKineticTemplate, hyper::HyperReal::omega(), alphabet);
  ASSERT_EQ(kinetic.subtle_positions.size(), 2U);
  for (auto p : kinetic.subtle_positions) EXPECT_FALSE(alphabet.readable(kinetic.word.codes.at(p)));
  std::size_t readable = 0;
  for (auto c : kinetic.word.codes) readable += alphabet.readable(c) ? 1 : 0;
  EXPECT_EQ(readable, kinetic.word.codes.size() - 2);

  const auto total = instantiate_template(kParticleTotalTemplate, hyper::parse_hyperreal("3W"), alphabet);
  ASSERT_EQ(total.subtle_positions.size(), 2U);
  EXPECT_NE(total.rendered.find("c+⟪"), std::string::npos);
}

TEST(Template, RejectsNonNatural) {
  EXPECT_ERRC(instantiate_template(kParticleTotalTemplate, hyper::parse_hyperreal("1/2")), Errc::NonNatSlotValue);
  EXPECT_ERRC(instantiate_template(kParticleTotalTemplate, hyper::parse_hyperreal("e")), Errc::NonNatSlotValue);
  EXPECT_ERRC(instantiate_template(kParticleTotalTemplate, hyper::parse_hyperreal("-W")), Errc::NonNatSlotValue);
  EXPECT_ERRC(instantiate_template("no slot here", hyper::HyperReal(2)), Errc::InvalidArgument);
}

}  // namespace
