#include "ulab/words/word_codec.hpp"

#include "ulab/error.hpp"

#include <algorithm>

namespace ulab::words {
namespace {

constexpr std::string_view kSlot = "{n}";

std::string replace_all(std::string text, std::string_view pattern, std::string_view value) {
  for (std::size_t pos = text.find(pattern); pos != std::string::npos; pos = text.find(pattern, pos + value.size()))
    text.replace(pos, pattern.size(), value);
  return text;
}

}  // namespace

std::vector<std::size_t> EncodedWord::subtle_positions(const Alphabet& alphabet) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < codes.size(); ++i)
    if (!alphabet.readable(codes[i])) out.push_back(i);
  return out;
}

EncodedWord encode_word(std::string_view word, const Alphabet& alphabet) {
  if (word.empty()) fail(Errc::EmptyWord, "the empty word cannot be encoded");
  EncodedWord out;
  for (const std::string& symbol : split_utf8(word)) {
    const auto code = alphabet.code(symbol);
    if (!code) fail(Errc::UnknownSymbol, "symbol '" + symbol + "' is not in the alphabet");
    out.codes.push_back(*code);
  }
  return out;
}

std::string decode_word(const EncodedWord& word, const Alphabet& alphabet) {
  std::string out;
  for (std::size_t i = 0; i < word.codes.size(); ++i) {
    if (!alphabet.readable(word.codes[i]))
      fail(Errc::SubtleSymbol, "position " + std::to_string(i) + " holds a pure-subtle code");
    out += alphabet.symbol(word.codes[i]);
  }
  return out;
}

std::string render_word(const EncodedWord& word, const Alphabet& alphabet) {
  std::string out;
  for (std::size_t i = 0; i < word.codes.size(); ++i) {
    if (alphabet.readable(word.codes[i])) {
      out += alphabet.symbol(word.codes[i]);
    } else {
      const auto tag = word.subtle_tags.find(i);
      out += "⟪" + (tag == word.subtle_tags.end() ? std::to_string(word.codes[i]) : tag->second) + "⟫";
    }
  }
  return out;
}

EncodedWord FrozenSegment::full() const {
  EncodedWord out = body;
  out.codes.insert(out.codes.end(), tail.codes.begin(), tail.codes.end());
  for (const auto& [pos, tag] : tail.subtle_tags) out.subtle_tags[body.codes.size() + pos] = tag;
  return out;
}

SegmentCodec::SegmentCodec(Alphabet alphabet, std::string tail_template)
    : alphabet_(std::move(alphabet)), tail_template_(std::move(tail_template)) {
  if (tail_template_.find("{i}") == std::string::npos)
    fail(Errc::InvalidArgument, "frozen tail template needs an {i} slot");
  encode_word(tail_text(0), alphabet_);
}

std::string SegmentCodec::tail_text(std::uint64_t index) const {
  return " " + replace_all(tail_template_, "{i}", std::to_string(index));
}

FrozenSegment SegmentCodec::make_frozen_segment(std::string_view body, std::uint64_t index) const {
  return FrozenSegment{encode_word(body, alphabet_), encode_word(tail_text(index), alphabet_), index};
}

bool SegmentCodec::totality_membership(const FrozenSegment& segment, std::uint64_t index) const {
  return segment.index == index && segment.tail == encode_word(tail_text(index), alphabet_);
}

std::string SegmentCodec::text(const FrozenSegment& segment) const { return decode_word(segment.full(), alphabet_); }

Paradigm SegmentCodec::build_paradigm(const std::map<std::uint64_t, std::string>& selector, IndexRange range) const {
  if (range.empty || range.last < range.first) fail(Errc::MissingIndex, "paradigm index range is empty");
  Paradigm p;
  p.kind = ParadigmKind::developmental;
  for (std::uint64_t i = range.first;; ++i) {
    const auto it = selector.find(i);
    if (it == selector.end()) fail(Errc::MissingIndex, "selector has no body for index " + std::to_string(i));
    p.segments.push_back(make_frozen_segment(it->second, i));
    if (i == range.last) break;
  }
  return p;
}

Paradigm SegmentCodec::general_paradigm(std::vector<FrozenSegment> segments) const {
  if (segments.empty()) fail(Errc::MissingIndex, "a paradigm needs at least one segment");
  for (std::size_t i = 0; i < segments.size(); ++i)
    for (std::size_t j = i + 1; j < segments.size(); ++j)
      if (segments[i] == segments[j]) fail(Errc::InvalidArgument, "paradigm segments must be pairwise distinct");
  return Paradigm{std::move(segments), ParadigmKind::general};
}

nlohmann::json SegmentCodec::to_json(const FrozenSegment& segment) const {
  return {{"index", segment.index},
          {"body", render_word(segment.body, alphabet_)},
          {"tail", render_word(segment.tail, alphabet_)},
          {"subtle", segment.full().subtle_positions(alphabet_)}};
}

std::vector<ChoiceSet> enumerate_choice_sets(const std::vector<std::set<std::string>>& samples,
                                             ChoiceSelector selector) {
  for (const auto& s : samples)
    if (s.empty()) fail(Errc::EmptySample, "choice samples must be nonempty");
  std::vector<ChoiceSet> out;
  if (selector.exactly) {
    if (samples.size() != 1) fail(Errc::InvalidArgument, "a sized choice takes exactly one sample");
    const std::vector<std::string> pool(samples.front().begin(), samples.front().end());
    const std::size_t k = *selector.exactly;
    if (k > pool.size()) return out;
    // walk k-combinations via a selection mask, lexicographic
    std::vector<bool> pick(pool.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      ChoiceSet set;
      for (std::size_t i = 0; i < pool.size(); ++i)
        if (pick[i]) set.push_back(pool[i]);
      out.push_back(std::move(set));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
  }
  if (samples.empty()) fail(Errc::EmptySample, "no samples to choose from");
  out.emplace_back();
  for (const auto& sample : samples) {
    std::vector<ChoiceSet> next;
    next.reserve(out.size() * sample.size());
    for (const auto& partial : out)
      for (const auto& element : sample) {
        next.push_back(partial);
        next.back().push_back(element);
      }
    out = std::move(next);
  }
  return out;
}

nlohmann::json TemplateInstance::to_json() const { return {{"text", rendered}, {"subtle", subtle_positions}}; }

TemplateInstance instantiate_template(std::string_view sentence, const hyper::HyperReal& slot_value,
                                      const Alphabet& alphabet) {
  const std::string text(sentence);
  if (text.find(kSlot) == std::string::npos) fail(Errc::InvalidArgument, "template has no {n} slot");

  const bool natural = slot_value.is_standard() && slot_value.coefficient(0).is_integer() && slot_value.sign() >= 0;
  const bool unlimited_nat = hyper::classify(slot_value) == hyper::Magnitude::unlimited && slot_value.sign() > 0;
  if (!natural && !unlimited_nat)
    fail(Errc::NonNatSlotValue, "slot value " + slot_value.str() + " is not natural or unlimited nat-like");

  TemplateInstance out;
  if (natural) {
    out.word = encode_word(replace_all(text, kSlot, slot_value.coefficient(0).str()), alphabet);
    out.rendered = decode_word(out.word, alphabet);
    return out;
  }
  // every slot carries the same value, hence the same subtle code
  const Code subtle = alphabet.size();
  const std::string tag = slot_value.str();
  std::size_t start = 0;
  for (std::size_t pos = text.find(kSlot); ; pos = text.find(kSlot, start)) {
    const std::string_view chunk = std::string_view(text).substr(start, pos == std::string::npos ? std::string::npos : pos - start);
    if (!chunk.empty()) {
      const EncodedWord piece = encode_word(chunk, alphabet);
      out.word.codes.insert(out.word.codes.end(), piece.codes.begin(), piece.codes.end());
    }
    if (pos == std::string::npos) break;
    out.word.subtle_tags[out.word.codes.size()] = tag;
    out.subtle_positions.push_back(out.word.codes.size());
    out.word.codes.push_back(subtle);
    start = pos + kSlot.size();
  }
  out.rendered = render_word(out.word, alphabet);
  return out;
}

}  // namespace ulab::words
