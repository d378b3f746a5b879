#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace histbias::tokenize {

enum class PunctuationPolicy { strip, keep };

struct RuleTokenizer {
    bool lowercase = true;
    PunctuationPolicy punctuation = PunctuationPolicy::strip;
};

/// Whitespace split, then leading/trailing punctuation is stripped (or split
/// off as separate tokens under `keep`). Apostrophes and hyphens between
/// word characters stay inside the token.
std::vector<std::string> tokenize_words(std::string_view sentence, const RuleTokenizer& t = {});

/// End-of-word marker appended to every word-final symbol.
inline constexpr std::string_view kEndOfWord = "</w>";

struct BpeModel {
    std::vector<std::pair<std::string, std::string>> merges;  ///< rank order
    std::unordered_map<std::string, int> vocab;                ///< symbol -> id
    std::size_t vocab_size = 0;                                ///< requested size

    /// Rank of a merge, or -1.
    int rank(const std::string& left, const std::string& right) const;

    void rebuild_index();

private:
    std::unordered_map<std::string, int> ranks_;  // key: left + '\x1f' + right
};

struct BpeTrainOptions {
    std::size_t vocab_size = 30000;
    std::size_t min_pair_count = 2;
};

/// Greedy BPE over word types. Ties in pair frequency go to the
/// lexicographically smallest (left, right) pair.
/// Throws DataError on an empty corpus and ConfigError when vocab_size does
/// not exceed the character inventory.
BpeModel bpe_train(const std::vector<std::string>& words, const BpeTrainOptions& options);
BpeModel bpe_train(const std::map<std::string, std::size_t>& word_counts, const BpeTrainOptions& options);

/// Symbols of `word` after applying merges in rank order. The last symbol
/// carries kEndOfWord. Characters never seen in training pass through.
std::vector<std::string> bpe_encode(std::string_view word, const BpeModel& model);

/// Encodes every token of every sentence, caching per word type.
std::vector<std::vector<std::string>> bpe_encode_sentences(const std::vector<std::vector<std::string>>& sentences,
                                                           const BpeModel& model);

/// Concatenates symbols and strips end-of-word markers.
std::string bpe_decode(const std::vector<std::string>& symbols);

/// Header line "bpe <vocab_size>", then one "left right" merge per line.
void save_bpe(const std::filesystem::path& path, const BpeModel& model);
BpeModel load_bpe(const std::filesystem::path& path);

}  // namespace histbias::tokenize
