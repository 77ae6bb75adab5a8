#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace infobs {

/// Index of an event within an Alphabet; kEpsilon marks the empty string.
using Label = std::int32_t;
inline constexpr Label kEpsilon = -1;

/// Reserved token for the empty string in files and masks.
inline constexpr std::string_view kEpsilonToken = "eps";

/// Suffix that turns an event into its primed copy. Never legal in user alphabets.
inline constexpr char kPrimeMarker = '\'';

/// True for tokens usable as events: printable ASCII without whitespace, ',', '#',
/// '"' or "->", and not the reserved "eps".
bool is_valid_event_token(std::string_view token);

/// is_valid_event_token() and additionally free of kPrimeMarker.
bool is_valid_user_event_token(std::string_view token);

/// Finite set of event tokens, kept in lexicographic order. Labels are positions
/// in that order, so two equal alphabets agree on every label.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> events);
  Alphabet(std::initializer_list<std::string_view> events);

  std::size_t size() const noexcept { return events_.size(); }
  bool empty() const noexcept { return events_.empty(); }
  const std::string& operator[](Label label) const { return events_.at(static_cast<std::size_t>(label)); }
  const std::vector<std::string>& events() const noexcept { return events_; }

  std::optional<Label> find(std::string_view event) const;
  bool contains(std::string_view event) const { return find(event).has_value(); }
  /// Throws InputError for foreign tokens.
  Label index_of(std::string_view event) const;

  bool is_subset_of(const Alphabet& other) const;
  Alphabet united(const Alphabet& other) const;

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<std::string> events_;
};

}  // namespace infobs
