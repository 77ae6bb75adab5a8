#include "infobs/alphabet.hpp"

#include <algorithm>

#include "infobs/errors.hpp"

namespace infobs {

bool is_valid_event_token(std::string_view token) {
  if (token.empty() || token == kEpsilonToken) return false;
  if (token.find("->") != std::string_view::npos) return false;
  return std::all_of(token.begin(), token.end(), [](char c) {
    return c > ' ' && c < 0x7f && c != ',' && c != '#' && c != '"';
  });
}

bool is_valid_user_event_token(std::string_view token) {
  return is_valid_event_token(token) && token.find(kPrimeMarker) == std::string_view::npos;
}

Alphabet::Alphabet(std::vector<std::string> events) : events_(std::move(events)) {
  for (const auto& e : events_) {
    if (!is_valid_event_token(e)) throw InputError("invalid event token '" + e + "'");
  }
  std::sort(events_.begin(), events_.end());
  auto dup = std::adjacent_find(events_.begin(), events_.end());
  if (dup != events_.end()) throw InputError("duplicate event '" + *dup + "'");
}

Alphabet::Alphabet(std::initializer_list<std::string_view> events)
    : Alphabet(std::vector<std::string>(events.begin(), events.end())) {}

std::optional<Label> Alphabet::find(std::string_view event) const {
  auto it = std::lower_bound(events_.begin(), events_.end(), event);
  if (it == events_.end() || *it != event) return std::nullopt;
  return static_cast<Label>(it - events_.begin());
}

Label Alphabet::index_of(std::string_view event) const {
  if (auto label = find(event)) return *label;
  throw InputError("event '" + std::string(event) + "' is not in the alphabet");
}

bool Alphabet::is_subset_of(const Alphabet& other) const {
  return std::includes(other.events_.begin(), other.events_.end(), events_.begin(), events_.end());
}

Alphabet Alphabet::united(const Alphabet& other) const {
  std::vector<std::string> merged;
  std::set_union(events_.begin(), events_.end(), other.events_.begin(), other.events_.end(),
                 std::back_inserter(merged));
  return Alphabet(std::move(merged));
}

}  // namespace infobs
