#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "histbias/tokenize.hpp"

namespace histbias::embed {

using Sentence = std::vector<std::string>;
using Corpus = std::vector<Sentence>;

/// Tokens ordered by descending count, ties lexicographic.
struct Vocabulary {
    std::vector<std::string> words;
    std::vector<std::uint64_t> counts;
    std::unordered_map<std::string, std::uint32_t> index;

    std::size_t size() const noexcept { return words.size(); }
    std::optional<std::uint32_t> find(std::string_view word) const;

    /// Builds `index` from `words`.
    void reindex();
};

/// Keeps exactly the tokens with count >= min_count. Throws DataError on an
/// empty corpus or when nothing survives the threshold.
Vocabulary build_vocab(const Corpus& corpus, std::uint64_t min_count);

struct TrainConfig {
    std::size_t dim = 100;
    std::uint64_t min_count = 5;
    std::size_t window = 5;
    std::size_t negatives = 5;
    std::size_t epochs = 5;
    double initial_lr = 0.025;
    double subsample_t = 1e-3;
    std::uint64_t seed = 1;
    std::size_t workers = 1;

    /// Throws ConfigError.
    void validate() const;
};

/// Input-vector matrix plus vocabulary. Immutable after construction.
class EmbeddingModel {
public:
    EmbeddingModel() = default;
    /// `matrix` is row-major |vocab| x dim. Throws DataError on size mismatch or non-finite values.
    EmbeddingModel(Vocabulary vocab, std::size_t dim, std::vector<float> matrix, std::uint64_t min_count = 0,
                   std::uint64_t seed = 0);

    std::size_t size() const noexcept { return vocab_.size(); }
    std::size_t dim() const noexcept { return dim_; }
    bool empty() const noexcept { return vocab_.size() == 0; }
    const Vocabulary& vocab() const noexcept { return vocab_; }
    const std::string& word(std::size_t i) const { return vocab_.words[i]; }
    std::optional<std::uint32_t> find(std::string_view word) const { return vocab_.find(word); }
    bool contains(std::string_view word) const { return vocab_.find(word).has_value(); }
    std::span<const float> row(std::size_t i) const { return {matrix_.data() + i * dim_, dim_}; }
    /// Euclidean norm of row i.
    double norm(std::size_t i) const { return norms_[i]; }
    const std::vector<float>& matrix() const noexcept { return matrix_; }
    std::uint64_t min_count() const noexcept { return min_count_; }
    std::uint64_t seed() const noexcept { return seed_; }

private:
    Vocabulary vocab_;
    std::size_t dim_ = 0;
    std::vector<float> matrix_;
    std::vector<double> norms_;
    std::uint64_t min_count_ = 0;
    std::uint64_t seed_ = 0;
};

/// Throws DataError for zero-norm input or a dimension mismatch.
double cosine(std::span<const float> u, std::span<const float> v);
double cosine(std::span<const double> u, std::span<const double> v);

struct Neighbor {
    std::string token;
    double cosine = 0.0;
};

/// Top-k rows by cosine, descending, ties broken by token. Excludes the query
/// itself. Throws LookupError when `query` is not in the vocabulary.
std::vector<Neighbor> nearest_neighbors(const EmbeddingModel& m, std::string_view query, std::size_t k);

/// Same ranking for an explicit query vector; `exclude` removes one row.
std::vector<Neighbor> nearest_neighbors(const EmbeddingModel& m, std::span<const float> query, std::size_t k,
                                        std::optional<std::uint32_t> exclude = std::nullopt);

/// Neighbor sets for every vocabulary row (as row indices), computed with the
/// same ranking as nearest_neighbors.
std::vector<std::vector<std::uint32_t>> all_neighbor_ids(const EmbeddingModel& m, std::size_t k);

enum class WordMode {
    word,     ///< stored row; for subword models the word must be a single whole-word symbol
    subword,  ///< unweighted mean of the known subword symbols' rows
};

/// `bpe` is required for subword mode and for word mode over a subword model.
/// Throws LookupError naming the word when it cannot be represented.
std::vector<float> word_vector(const EmbeddingModel& m, std::string_view word, WordMode mode,
                               const tokenize::BpeModel* bpe = nullptr);

/// Word-level model over `words` built from a subword model; unrepresentable
/// words are skipped. `counts` (parallel to `words`) may be empty.
EmbeddingModel compose_word_model(const EmbeddingModel& subword_model, const tokenize::BpeModel& bpe,
                                  const std::vector<std::string>& words, const std::vector<std::uint64_t>& counts,
                                  WordMode mode);

/// Noise distribution proportional to count^power, sampled with Vose's alias method.
class UnigramSampler {
public:
    UnigramSampler(std::span<const std::uint64_t> counts, double power = 0.75);

    std::uint32_t sample(std::mt19937_64& rng) const;
    double probability(std::size_t i) const { return prob_[i]; }
    std::size_t size() const noexcept { return prob_.size(); }

private:
    std::vector<double> prob_;
    std::vector<double> accept_;
    std::vector<std::uint32_t> alias_;
};

struct TrainStats {
    std::vector<double> epoch_loss;  ///< mean negative-sampling loss per (center, output) pair
    std::uint64_t pairs = 0;
};

/// Skip-gram with negative sampling. With workers == 1 the result depends only
/// on (corpus, cfg). Throws ConfigError for invalid configs and DataError when
/// the in-vocabulary corpus is shorter than one window.
EmbeddingModel train_sgns(const Corpus& corpus, const TrainConfig& cfg, TrainStats* stats = nullptr);

/// Textual word-vector format: "<count> <dim>" then "<token> <v1> ... <vd>".
void save_model(const std::filesystem::path& path, const EmbeddingModel& m);
/// Throws ParseError with the offending line number.
EmbeddingModel load_model(const std::filesystem::path& path);

}  // namespace histbias::embed
