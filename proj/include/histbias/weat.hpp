#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "histbias/embed.hpp"

namespace histbias::weat {

/// Named word list; words are lowercased and deduplicated in first-seen order.
struct WordSet {
    std::string name;
    std::vector<std::string> words;

    WordSet() = default;
    WordSet(std::string name, std::vector<std::string> words);
};

/// `{ "name": ..., "words": [...] }`. Throws ParseError; empty sets are rejected.
WordSet load_word_set(const std::filesystem::path& path);

/// Mean cosine of `w` to the representable words of A minus the same for B.
/// Throws LookupError when `w` is unrepresentable or A or B has no representable word.
double assoc_s(const std::string& w, const WordSet& a, const WordSet& b, const embed::EmbeddingModel& m);

/// Sum of s(x) over X minus sum of s(y) over Y.
double weat_statistic(const WordSet& x, const WordSet& y, const WordSet& a, const WordSet& b,
                      const embed::EmbeddingModel& m);

/// (mean_X s - mean_Y s) / population std over X followed by Y.
/// Throws DataError("degenerate target geometry") when the std is zero.
double effect_size(const WordSet& x, const WordSet& y, const WordSet& a, const WordSet& b,
                   const embed::EmbeddingModel& m);

/// One-sided Monte-Carlo p-value over random re-partitions of X u Y into
/// sets of sizes |X| and |Y|; the observed partition counts once, so p > 0.
/// Throws DataError when |X u Y| < 4 and ConfigError when n_perm < 100.
double permutation_pvalue(const WordSet& x, const WordSet& y, const WordSet& a, const WordSet& b,
                          const embed::EmbeddingModel& m, std::size_t n_perm, std::uint64_t seed);

/// Same test on precomputed association values: the first `nx` entries of `s` form X.
double permutation_pvalue(const std::vector<double>& s, std::size_t nx, std::size_t n_perm, std::uint64_t seed);

struct WeatTest {
    WordSet x, y;  ///< targets
    WordSet a, b;  ///< attributes

    std::string target_pair() const { return x.name + "|" + y.name; }
    std::string attribute_pair() const { return a.name + "|" + b.name; }
};

struct WeatOptions {
    double max_drop_fraction = 0.5;  ///< a set losing more than this share of its words fails the test
    std::size_t n_perm = 10000;
    std::uint64_t seed = 7;
};

struct WeatResult {
    std::string attributes;  ///< "A|B"
    std::string targets;     ///< "X|Y"
    double s_statistic = 0.0;
    double effect_size_d = 0.0;
    double p_value = 1.0;
    std::vector<std::string> dropped_a, dropped_b, dropped_x, dropped_y;
};

/// Drops out-of-vocabulary words (recorded per set), then computes s, d, p.
/// Throws DataError when a set loses more than max_drop_fraction of its words.
WeatResult run_weat(const WeatTest& test, const embed::EmbeddingModel& m, const WeatOptions& options = {});

struct WeatRow {
    std::string period;  ///< empty for a whole-corpus model
    std::string attributes;
    std::string targets;
    std::optional<WeatResult> result;
    std::string error;  ///< set when the cell failed
};

/// One row per (period, test). Failing cells are recorded and skipped.
std::vector<WeatRow> weat_temporal(const std::map<std::string, embed::EmbeddingModel>& period_models,
                                   const std::vector<WeatTest>& tests, const WeatOptions& options = {});

/// CSV: period,attr_pair,target_pair,s,d,p,dropped_A,dropped_B,dropped_X,dropped_Y.
/// Dropped words are ';'-joined. Failed cells leave s, d, p empty.
std::string weat_csv(const std::vector<WeatRow>& rows);

/// Tests file: [{"targets": ["career", "family"], "attributes": ["females", "males"]}, ...]
/// naming word-set files `<name>.json` in `set_dir`.
std::vector<WeatTest> load_tests(const std::filesystem::path& path, const std::filesystem::path& set_dir);

}  // namespace histbias::weat
