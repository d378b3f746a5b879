#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "histbias/embed.hpp"

namespace histbias::stability {

struct MisspellPair {
    std::string misspelt;
    std::string correct;
};

/// `misspelt<TAB>correct` lines, '#' comments. Tokens are lowercased to match
/// the default word tokenizer. Throws ParseError on malformed lines or
/// identical columns.
std::vector<MisspellPair> load_misspell_pairs(const std::filesystem::path& path);

/// Mean Jaccard similarity of top-k neighbor sets over every word shared by
/// all models and every unordered model pair. Throws DataError for fewer
/// than two models or an empty shared vocabulary, ConfigError for k == 0.
double jaccard_neighbors(const std::vector<embed::EmbeddingModel>& models, std::size_t k);

struct MisspellingResult {
    std::size_t pairs = 0;
    std::size_t representable = 0;  ///< misspelt token has a vector
    std::size_t hits = 0;           ///< correct token among top-k neighbors of the misspelt one
    std::size_t reverse_pairs = 0;  ///< both tokens have vectors
    std::size_t reverse_hits = 0;   ///< misspelt token among top-k neighbors of the correct one
    double pct_top_k = 0.0;         ///< hits / representable, in percent
    double pct_in_vocab = 0.0;      ///< representable / pairs, in percent
    double pct_reverse_top_k = 0.0;
};

MisspellingResult misspelling_recovery(const embed::EmbeddingModel& m, const std::vector<MisspellPair>& pairs,
                                       std::size_t k = 5);

enum class TokenizerKind { word, bpe };

std::string to_string(TokenizerKind t);
TokenizerKind parse_tokenizer(const std::string& s);

struct GridCell {
    TokenizerKind tokenizer = TokenizerKind::word;
    std::size_t dim = 100;
    std::uint64_t min_count = 20;
};

struct GridSpec {
    std::vector<TokenizerKind> tokenizers{TokenizerKind::word, TokenizerKind::bpe};
    std::vector<std::size_t> dims{100, 300};
    std::vector<std::uint64_t> min_counts{20, 100};
    std::size_t bpe_vocab_size = 30000;
    embed::WordMode bpe_word_mode = embed::WordMode::subword;
    embed::TrainConfig train;  ///< dim, min_count and seed are overridden per run

    std::vector<GridCell> cells() const;
};

/// JSON: {"tokenizers":[..], "dims":[..], "min_counts":[..], "bpe_vocab_size":N,
///        "bpe_word_mode":"subword"|"word", "train":{"window":..,"negatives":..,"epochs":..,
///        "initial_lr":..,"subsample_t":..,"workers":..}}
GridSpec load_grid(const std::filesystem::path& path);
GridSpec parse_grid(std::string_view json_text, const std::string& origin = "inline");

struct RunDetail {
    std::uint64_t seed = 0;
    std::size_t vocab_size = 0;
    MisspellingResult misspelling;
    std::vector<double> epoch_loss;
};

struct StabilityReport {
    GridCell cell;
    std::size_t runs = 0;
    std::size_t k = 20;
    std::size_t misspell_k = 5;
    double mean_jaccard = 0.0;            ///< in [0,1]
    double pct_correct_in_top_k = 0.0;    ///< averaged across runs, [0,100]
    double pct_misspelling_in_vocab = 0.0;
    double pct_reverse_in_top_k = 0.0;
    std::vector<RunDetail> per_run;
};

struct GridOptions {
    std::size_t runs = 5;
    std::size_t k = 20;
    std::size_t misspell_k = 5;
    std::uint64_t base_seed = 1;  ///< run i trains with base_seed + i
    std::size_t threads = 1;      ///< concurrent training runs
};

/// Trains `runs` models per grid cell on a word-tokenized corpus and reports
/// neighbor stability and misspelling recovery. Subword cells are evaluated
/// on a word-level model composed over the corpus words reaching min_count
/// plus the pair tokens seen in the corpus.
std::vector<StabilityReport> run_grid(const embed::Corpus& corpus, const GridSpec& grid,
                                      const std::vector<MisspellPair>& pairs, const GridOptions& options = {});

/// Header: tokenizer,dim,min_count,runs,mean_jaccard_top{k},pct_correct_in_top{mk},
///         pct_misspelling_in_vocab,pct_reverse_in_top{mk}
std::string reports_csv(const std::vector<StabilityReport>& reports);

}  // namespace histbias::stability
