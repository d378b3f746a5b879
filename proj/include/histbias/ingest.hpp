#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <regex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace histbias::ingest {

struct RawDocument {
    std::string id;
    std::string source;
    int year = 0;
    std::string text;
};

struct CleanSentence {
    std::string doc_id;
    std::size_t index = 0;
    std::string text;
    double english_score = 0.5;
};

struct PeriodSpec {
    std::string name;
    int start_year = 0;
    int end_year = 0;  // inclusive
};

// ---------------------------------------------------------------------------
// OCR cleanup
// ---------------------------------------------------------------------------

/// Word list with light inflection handling (plural, past tense, -ing, -ly).
class Dictionary {
public:
    Dictionary() = default;
    explicit Dictionary(std::unordered_set<std::string> words) : words_(std::move(words)) {}

    static Dictionary load(const std::filesystem::path& path);

    /// `word` must already be lowercase.
    bool contains(std::string_view word) const;
    bool contains_exact(std::string_view word) const { return words_.count(std::string(word)) > 0; }
    std::size_t size() const noexcept { return words_.size(); }

private:
    std::unordered_set<std::string> words_;
};

enum class RuleKind {
    literal,  ///< plain substring replacement
    regex,    ///< ECMAScript regex, `$1` style back-references
    gated,    ///< single-character swap inside a word, only when it turns a non-word into a dictionary word
    word,     ///< whole-word replacement, case pattern of the original is kept
};

struct OcrRule {
    RuleKind kind = RuleKind::literal;
    std::string pattern;
    std::string replacement;
};

/// An ordered, validated rule table. Rules apply in order, each over the whole text.
class OcrCleaner {
public:
    /// Throws ConfigError naming the 0-based rule index on an invalid rule.
    explicit OcrCleaner(std::vector<OcrRule> rules, std::shared_ptr<const Dictionary> dictionary = nullptr);

    /// Reads a rule table (see data/ocr/rules.tsv for the format). Paths
    /// named by `dictionary` and `wordmap` directives resolve relative to the file.
    static OcrCleaner load(const std::filesystem::path& path);

    std::string clean(std::string_view text) const;

    const std::vector<OcrRule>& rules() const noexcept { return rules_; }

private:
    std::string apply_gated(std::string_view text, const OcrRule& rule) const;
    std::string apply_word_map(std::string_view text, std::size_t first, std::size_t last) const;

    std::vector<OcrRule> rules_;
    std::vector<std::regex> compiled_;  // parallel to rules_, unused for non-regex kinds
    std::shared_ptr<const Dictionary> dictionary_;
};

std::string clean_ocr(std::string_view text, const OcrCleaner& cleaner);

/// Convenience overload that validates `rules` on every call.
std::string clean_ocr(std::string_view text, const std::vector<OcrRule>& rules,
                      std::shared_ptr<const Dictionary> dictionary = nullptr);

// ---------------------------------------------------------------------------
// Sentence segmentation
// ---------------------------------------------------------------------------

/// Splits on terminal punctuation followed by whitespace, except after known
/// abbreviations, and on blank lines. Internal whitespace runs collapse to one space.
/// english_score is left at 0.5 until scored.
std::vector<CleanSentence> segment_sentences(const RawDocument& doc);

const std::unordered_set<std::string>& default_abbreviations();

// ---------------------------------------------------------------------------
// Language identification
// ---------------------------------------------------------------------------

class NgramProfile {
public:
    explicit NgramProfile(std::size_t order = 3) : order_(order) {}

    void add_text(std::string_view text);

    std::size_t order() const noexcept { return order_; }
    std::size_t total() const noexcept { return total_; }
    std::size_t count(const std::string& gram) const;
    std::size_t distinct() const noexcept { return counts_.size(); }

private:
    std::size_t order_;
    std::unordered_map<std::string, std::size_t> counts_;
    std::size_t total_ = 0;
};

/// Character n-gram grams of lowercased, whitespace-normalized text padded with one space.
std::vector<std::string> char_ngrams(std::string_view text, std::size_t order);

struct LanguageScore {
    double english = 0.5;
    bool informative = false;  ///< false when the text is shorter than the n-gram order
};

/// One profile per language; "en" must be present along with at least one contrast language.
class LanguageProfiles {
public:
    LanguageProfiles() = default;
    LanguageProfiles(std::map<std::string, NgramProfile> profiles);

    static LanguageProfiles train(const std::map<std::string, std::string>& texts, std::size_t order = 3);

    /// Trains from every `<lang>.txt` in `dir`.
    static LanguageProfiles load_dir(const std::filesystem::path& dir, std::size_t order = 3);

    LanguageScore score(std::string_view sentence) const;
    std::size_t order() const noexcept { return order_; }
    bool empty() const noexcept { return profiles_.empty(); }

private:
    std::map<std::string, NgramProfile> profiles_;
    std::size_t order_ = 3;
    std::size_t vocabulary_ = 1;  // distinct grams across all profiles, for add-one smoothing
};

double score_english(std::string_view sentence, const LanguageProfiles& profiles);

// ---------------------------------------------------------------------------
// Periods
// ---------------------------------------------------------------------------

/// Throws ConfigError on inverted ranges, duplicate names or overlaps.
void validate_periods(const std::vector<PeriodSpec>& periods);

struct PeriodBucket {
    PeriodSpec period;
    std::vector<RawDocument> docs;
};

struct PeriodBuckets {
    std::vector<PeriodBucket> periods;  ///< same order as the input specs
    std::vector<RawDocument> unassigned;

    const PeriodBucket* find(std::string_view name) const;
};

PeriodBuckets bucket_by_period(const std::vector<RawDocument>& docs, const std::vector<PeriodSpec>& periods);

/// Period name for `year`, or empty when unassigned.
std::string period_of(int year, const std::vector<PeriodSpec>& periods);

// ---------------------------------------------------------------------------
// Corpus processing and I/O
// ---------------------------------------------------------------------------

struct IngestStats {
    std::size_t documents = 0;
    std::size_t sentences = 0;
    std::size_t non_english = 0;
    std::size_t uninformative = 0;
};

struct IngestResult {
    std::vector<CleanSentence> sentences;  ///< English sentences sorted by (doc id, index)
    IngestStats stats;
};

/// clean -> segment -> score -> filter (score >= threshold kept).
/// Empty profiles keep every sentence unscored.
IngestResult ingest_documents(const std::vector<RawDocument>& docs, const OcrCleaner& cleaner,
                              const LanguageProfiles& profiles, double threshold = 0.5);

std::vector<RawDocument> load_documents(const std::filesystem::path& path);
void save_documents(const std::filesystem::path& path, const std::vector<RawDocument>& docs);

std::vector<CleanSentence> load_sentences(const std::filesystem::path& path);
void save_sentences(const std::filesystem::path& path, const std::vector<CleanSentence>& sentences);

std::vector<PeriodSpec> load_periods(const std::filesystem::path& path);

/// JSON object: period name -> doc ids, plus "unassigned".
std::string period_manifest_json(const PeriodBuckets& buckets);

/// Inverse of period_manifest_json: doc id -> period name (unassigned docs omitted).
std::map<std::string, std::string> load_period_manifest(const std::filesystem::path& path);

}  // namespace histbias::ingest
