#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "histbias/ingest.hpp"

namespace histbias::entities {

// ---- annotation schema -------------------------------------------------

struct Token {
    int i = 0;
    std::string text;
    std::string lemma;
    std::string pos;
    int head = -1;  ///< index of the governing token in the same sentence, -1 for none
    std::string dep;
};

struct AnnotatedSentence {
    std::size_t index = 0;
    std::vector<Token> tokens;

    /// Token texts joined by single spaces; mention character offsets index into it.
    std::string text() const;
};

/// Token span [start_token, end_token) in sentence `sentence`; `head` lies inside the span.
struct MentionSpan {
    std::size_t sentence = 0;
    std::size_t start_token = 0;
    std::size_t end_token = 0;
    std::size_t head = 0;
};

struct EntityAnnotation {
    std::string id;
    std::vector<MentionSpan> mentions;
};

struct AnnotatedDocument {
    std::string doc_id;
    std::vector<AnnotatedSentence> sentences;
    std::vector<EntityAnnotation> entities;

    const AnnotatedSentence* find_sentence(std::size_t index) const;
};

/// Throws ParseError naming the first offending field. Checks token indices
/// are 0..n-1, heads are in range, mention spans are non-empty and in bounds,
/// and every mention references an existing sentence.
void validate(const AnnotatedDocument& doc);

AnnotatedDocument parse_annotation(const std::string& json_line);
std::string annotation_json(const AnnotatedDocument& doc);

/// One document per line; ParseError carries the line number.
std::vector<AnnotatedDocument> load_annotations(const std::filesystem::path& path);
void save_annotations(const std::filesystem::path& path, const std::vector<AnnotatedDocument>& docs);

// ---- chains ------------------------------------------------------------

struct Mention {
    std::string doc_id;
    std::size_t sentence_index = 0;
    std::size_t char_start = 0;  ///< into AnnotatedSentence::text()
    std::size_t char_end = 0;
    std::string surface;
    std::size_t head_token_index = 0;
    std::size_t start_token = 0;
    std::size_t end_token = 0;
    std::string head_lemma;  ///< lowercase
};

struct EntityChain {
    std::string entity_id;  ///< "<doc_id>:<annotation id>"
    std::vector<Mention> mentions;  ///< sorted by (doc, sentence, start)
    bool is_person = false;
};

/// Resolves token spans to surfaces and offsets. Throws ParseError on invalid documents.
std::vector<EntityChain> chains_of(const AnnotatedDocument& doc);

// ---- persons -----------------------------------------------------------

/// Personal pronouns recognised as person evidence.
const std::unordered_set<std::string>& personal_pronouns();

struct PersonLexicon {
    std::unordered_set<std::string> nouns;  ///< lowercase head nouns, no pronouns

    /// One lowercase noun per line, '#' comments.
    static PersonLexicon load(const std::filesystem::path& path);
    bool contains(const std::string& lemma) const;
};

struct PersonFilterOptions {
    bool pronoun_evidence = true;  ///< a chain whose only evidence is a pronoun is kept
};

/// Keeps chains where some mention's head lemma is a person noun (or a
/// personal pronoun, if allowed) and marks them is_person.
std::vector<EntityChain> filter_persons(const std::vector<EntityChain>& chains, const PersonLexicon& lexicon,
                                        const PersonFilterOptions& options = {});

// ---- classification ----------------------------------------------------

enum class Gender { male, female, unknown };
enum class Race { white, non_white };

std::string to_string(Gender g);
std::string to_string(Race r);
Gender parse_gender(const std::string& s);
Race parse_race(const std::string& s);

struct GroupAssignment {
    Gender gender = Gender::unknown;
    Race race = Race::white;
    bool gender_conflict = false;  ///< both male and female keywords matched

    /// "<race>_<gender>", e.g. "non_white_female".
    std::string intersection() const;
    bool operator==(const GroupAssignment&) const = default;
};

struct KeywordSets {
    std::unordered_set<std::string> male;
    std::unordered_set<std::string> female;
    std::unordered_set<std::string> non_white;

    /// Reads male.txt, female.txt and non_white.txt, one lowercase token per line.
    static KeywordSets load_dir(const std::filesystem::path& dir);
};

/// Lowercase word tokens of every mention surface.
std::vector<std::string> mention_tokens(const EntityChain& chain);

/// A group is granted when any mention token is one of its keywords.
/// Race is white unless a non-white keyword matched.
GroupAssignment classify_entity(const EntityChain& chain, const KeywordSets& keywords);

// ---- descriptors -------------------------------------------------------

struct DescriptorOptions {
    bool head_only = false;  ///< arcs must attach to the mention head instead of any mention token
};

struct DescriptorStats {
    std::size_t missing_sentences = 0;
};

/// Lowercased lemmas of amod dependents of the chain's mention tokens; each
/// arc counts once even if mentions overlap.
std::vector<std::string> collect_descriptors(const EntityChain& chain, const AnnotatedDocument& doc,
                                             const DescriptorOptions& options = {}, DescriptorStats* stats = nullptr);

// ---- entity records ----------------------------------------------------

struct EntityRecord {
    std::string entity_id;
    std::string doc_id;
    std::vector<std::string> mentions;  ///< surfaces
    GroupAssignment group;
    std::vector<std::string> descriptors;
};

struct ExtractOptions {
    PersonFilterOptions persons;
    DescriptorOptions descriptors;
};

struct ExtractStats {
    std::size_t documents = 0;
    std::size_t chains = 0;
    std::size_t persons = 0;
    std::size_t missing_sentences = 0;
};

/// chains_of -> filter_persons -> classify_entity + collect_descriptors, in document order.
std::vector<EntityRecord> extract_entities(const std::vector<AnnotatedDocument>& docs, const PersonLexicon& persons,
                                           const KeywordSets& keywords, const ExtractOptions& options = {},
                                           ExtractStats* stats = nullptr);

std::string record_json(const EntityRecord& r);
EntityRecord parse_record(const std::string& json_line);
void save_records(const std::filesystem::path& path, const std::vector<EntityRecord>& records);
std::vector<EntityRecord> load_records(const std::filesystem::path& path);

struct EntityCounts {
    std::size_t entities = 0;
    std::size_t males = 0;
    std::size_t females = 0;
    std::size_t gender_conflicts = 0;
    std::size_t non_whites = 0;
    std::size_t non_white_males = 0;
    std::size_t non_white_females = 0;
};

EntityCounts count_entities(const std::vector<EntityRecord>& records);

/// Two columns: count name and value.
std::string counts_csv(const EntityCounts& c);

// ---- evaluation --------------------------------------------------------

struct GoldLabel {
    Gender gender = Gender::unknown;
    Race race = Race::white;
};

/// JSONL {"entity_id":..., "gender":"male|female|unknown", "race":"white|non_white"}.
std::map<std::string, GoldLabel> load_gold(const std::filesystem::path& path);

struct ClassificationRow {
    std::string attribute;  ///< Non-whites, Whites, Males, Females
    std::size_t support = 0;  ///< gold entities carrying the attribute
    double correct = 0.0;
    double incorrect = 0.0;
    double unclassifiable = 0.0;
};

/// Rows are keyed by the gold label. A prediction of unknown gender counts
/// as unclassifiable. Throws LookupError when a gold id has no prediction.
std::vector<ClassificationRow> eval_classification(const std::map<std::string, GroupAssignment>& predicted,
                                                   const std::map<std::string, GoldLabel>& gold);

/// Header: Attribute,Ratio of correctly classified entities,Ratio of incorrectly
/// classified entities,Ratio of unable to classify,support
std::string classification_csv(const std::vector<ClassificationRow>& rows);

// ---- heuristic annotator -----------------------------------------------

struct AnnotatorLexicon {
    PersonLexicon persons;
    KeywordSets keywords;
    std::unordered_set<std::string> adjectives;
    std::unordered_map<std::string, Gender> first_names;

    /// Directory with person_nouns.txt, adjectives.txt and first_names.tsv;
    /// keywords come from `keyword_dir`.
    static AnnotatorLexicon load(const std::filesystem::path& dir, const std::filesystem::path& keyword_dir);
};

struct AnnotatorOptions {
    std::size_t pronoun_window = 3;  ///< sentences back a pronoun may reach for an antecedent
};

/// Rule-based mentions (name spans, determiner-adjective-person-noun phrases,
/// gendered pronouns), exact-string name linking, windowed pronoun linking and
/// amod arcs from lexicon adjectives preceding a mention head. Sentences are
/// grouped by doc_id and ordered by index.
std::vector<AnnotatedDocument> heuristic_annotate(const std::vector<ingest::CleanSentence>& sentences,
                                                  const AnnotatorLexicon& lexicon,
                                                  const AnnotatorOptions& options = {});

struct PairScore {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

/// Pairwise coreference score over mention pairs, mentions identified by
/// (doc, sentence, head token).
PairScore chain_pair_f1(const std::vector<AnnotatedDocument>& predicted, const std::vector<AnnotatedDocument>& gold);

}  // namespace histbias::entities
