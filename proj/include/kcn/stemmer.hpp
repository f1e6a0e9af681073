#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>

namespace kcn {

// Suffix-stripping stemmer: the classic Porter algorithm extended with
// irregular-plural handling, superlative ("est") and adverb ("ly")
// stripping, iterated to a fixed point so that stemming is idempotent.
//
// An exception table, keyed by the unstemmed lowercase word, overrides the
// algorithmic output. It ships with {postoperative -> postop} and can be
// extended from a config file (lines of `word<TAB>stem`, `#` comments).
class Stemmer {
  public:
    Stemmer();

    void add_exception(std::string word, std::string stem);
    void load_exceptions(const std::filesystem::path& file);

    std::string stem(std::string_view token) const;

  private:
    std::unordered_map<std::string, std::string> exceptions_;
};

}  // namespace kcn
