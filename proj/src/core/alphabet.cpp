#include "opberg/error.hpp"
#include "opberg/types.hpp"

namespace opberg {

TokenId Alphabet::intern(std::string_view tag) {
  std::string key(tag);
  if (auto it = ids_.find(key); it != ids_.end()) return it->second;
  const auto id = static_cast<TokenId>(tags_.size());
  tags_.push_back(key);
  ids_.emplace(std::move(key), id);
  return id;
}

std::optional<TokenId> Alphabet::find(std::string_view tag) const {
  if (auto it = ids_.find(std::string(tag)); it != ids_.end()) return it->second;
  return std::nullopt;
}

const std::string& Alphabet::surface(TokenId id) const {
  if (id >= tags_.size()) {
    throw IndexError("token id " + std::to_string(id) + " not in alphabet of size " +
                     std::to_string(tags_.size()));
  }
  return tags_[id];
}

TokenSeq intern(const std::vector<std::string>& tags, Alphabet& alphabet) {
  TokenSeq seq;
  seq.ids.reserve(tags.size());
  for (const auto& tag : tags) seq.ids.push_back(alphabet.intern(tag));
  return seq;
}

std::vector<std::string> surfaces(const TokenSeq& seq, const Alphabet& alphabet) {
  std::vector<std::string> out;
  out.reserve(seq.size());
  for (TokenId id : seq.ids) out.push_back(alphabet.surface(id));
  return out;
}

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::sw:
      return "sw";
    case Mode::naive:
      return "naive";
    case Mode::opberg:
      return "opberg";
  }
  return "?";
}

std::optional<Mode> parse_mode(std::string_view text) {
  if (text == "sw") return Mode::sw;
  if (text == "naive") return Mode::naive;
  if (text == "opberg") return Mode::opberg;
  return std::nullopt;
}

}  // namespace opberg
