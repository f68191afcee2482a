#pragma once

#include "ulab/hyper/kernel.hpp"
#include "ulab/words/alphabet.hpp"

#include "json.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ulab::words {

inline constexpr std::string_view kDefaultFrozenTail =
    "This frozen segment gives a description for the time interval that has as its leftmost endpoint "
    "the time t_{i} that corresponds to the natural number {i}.";

inline constexpr std::string_view kParticleKineticTemplate =
    "An elementary particle α({n}) with kinetic energy c+1/({n}).";
inline constexpr std::string_view kParticleTotalTemplate = "An elementary particle α({n}) with total energy c+{n}.";

/// A word as a sequence of codes. Codes >= |alphabet| are pure-subtle markers;
/// `subtle_tags` holds their opaque labels by position.
struct EncodedWord {
  std::vector<Code> codes;
  std::map<std::size_t, std::string> subtle_tags;

  std::size_t canonical_length() const { return codes.size(); }
  std::vector<std::size_t> subtle_positions(const Alphabet& alphabet) const;

  friend bool operator==(const EncodedWord&, const EncodedWord&) = default;
};

/// Throws EmptyWord or UnknownSymbol.
EncodedWord encode_word(std::string_view word, const Alphabet& alphabet);
/// Throws SubtleSymbol when a code has no alphabet symbol.
std::string decode_word(const EncodedWord& word, const Alphabet& alphabet);
/// Like decode_word, but shows subtle positions as "⟪tag⟫".
std::string render_word(const EncodedWord& word, const Alphabet& alphabet);

struct FrozenSegment {
  EncodedWord body;
  EncodedWord tail;
  std::uint64_t index = 0;

  EncodedWord full() const;
  friend bool operator==(const FrozenSegment&, const FrozenSegment&) = default;
};

enum class ParadigmKind { developmental, general };

struct Paradigm {
  std::vector<FrozenSegment> segments;
  ParadigmKind kind = ParadigmKind::developmental;
};

struct IndexRange {
  std::uint64_t first = 0;
  std::uint64_t last = 0;  ///< inclusive
  bool empty = false;

  static IndexRange none() { return {0, 0, true}; }
};

/// Builds frozen segments, totalities and paradigms against one alphabet and tail template.
class SegmentCodec {
 public:
  explicit SegmentCodec(Alphabet alphabet = Alphabet::standard(),
                        std::string tail_template = std::string(kDefaultFrozenTail));

  const Alphabet& alphabet() const { return alphabet_; }
  std::string tail_text(std::uint64_t index) const;

  /// Throws EmptyWord or UnknownSymbol.
  FrozenSegment make_frozen_segment(std::string_view body, std::uint64_t index) const;
  bool totality_membership(const FrozenSegment& segment, std::uint64_t index) const;
  std::string text(const FrozenSegment& segment) const;

  /// One segment per index of the range. Throws MissingIndex for an empty
  /// range or an index the selector does not cover.
  Paradigm build_paradigm(const std::map<std::uint64_t, std::string>& selector, IndexRange range) const;
  /// Throws InvalidArgument if two segments coincide.
  Paradigm general_paradigm(std::vector<FrozenSegment> segments) const;

  nlohmann::json to_json(const FrozenSegment& segment) const;

 private:
  Alphabet alphabet_;
  std::string tail_template_;
};

struct ChoiceSelector {
  std::optional<std::size_t> exactly;  ///< empty: one element per sample

  static ChoiceSelector all() { return {}; }
  static ChoiceSelector of_size(std::size_t k) { return {k}; }
};

using ChoiceSet = std::vector<std::string>;

/// `all`: every pick of one element per sample, in sample order.
/// `exactly(k)`: all k-element subsets of the single sample, lexicographic.
/// Throws EmptySample; `exactly` with several samples is InvalidArgument.
std::vector<ChoiceSet> enumerate_choice_sets(const std::vector<std::set<std::string>>& samples,
                                             ChoiceSelector selector);

/// A template sentence after slot substitution.
struct TemplateInstance {
  EncodedWord word;
  std::string rendered;
  std::vector<std::size_t> subtle_positions;
  nlohmann::json to_json() const;
};

/// Replaces every "{n}" slot. A natural value is written in decimal; an
/// unlimited nat-like value turns each slot into one pure-subtle code.
/// Throws NonNatSlotValue for values that are neither, InvalidArgument if there is no slot.
TemplateInstance instantiate_template(std::string_view sentence, const hyper::HyperReal& slot_value,
                                      const Alphabet& alphabet = Alphabet::standard());

}  // namespace ulab::words
