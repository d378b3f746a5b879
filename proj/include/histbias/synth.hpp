#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "histbias/entities.hpp"
#include "histbias/ingest.hpp"
#include "histbias/stability.hpp"

namespace histbias::synth {

struct GroupSpec {
    std::string name;  ///< an intersection cell, e.g. "non_white_female"
    double prior = 0.0;
};

struct DescriptorSpec {
    std::string lemma;
    double weight = 1.0;                        ///< base weight
    std::map<std::string, double> multipliers;  ///< group -> odds multiplier, default 1
};

struct TopicSpec {
    std::string name;
    std::vector<std::string> words;  ///< explicit vocabulary, or generated from `size`; an entry with spaces is a fixed phrase
};

struct OcrNoise {
    double rate = 0.0;
    std::vector<stability::MisspellPair> substitutions;  ///< correct word -> corrupted form
};

struct PlantSpec {
    std::vector<GroupSpec> groups;
    std::vector<DescriptorSpec> descriptors;
    std::vector<TopicSpec> topics;
    OcrNoise ocr_noise;
    std::uint64_t seed = 1;
    std::size_t topic_words = 5;  ///< topic words per sentence
    std::size_t sentences_per_doc = 20;
    int first_year = 1751;
    int last_year = 1876;

    /// Throws ConfigError on empty groups, unknown group names, priors not
    /// summing to 1, non-positive multipliers, a rate outside [0,1] or
    /// descriptors colliding with group keywords or topic words.
    void validate(const entities::KeywordSets* keywords = nullptr) const;
};

/// JSON spec; topics may give "words" or a "size" for generated vocabulary.
PlantSpec load_spec(const std::filesystem::path& path);

struct SynthCorpus {
    std::vector<ingest::RawDocument> documents;
    std::vector<entities::AnnotatedDocument> annotations;
    std::map<std::string, entities::GoldLabel> gold;  ///< entity id -> spec label
    std::map<std::string, std::map<std::string, std::uint64_t>> samples;  ///< group -> descriptor -> draws
    std::vector<std::vector<std::string>> token_sentences;  ///< lowercase word tokens per sentence
    std::size_t substitutions = 0;
};

/// One entity sentence per sample: "The <descriptor> <group noun phrase>
/// <verb> the <topic words> .". Deterministic in spec.seed.
SynthCorpus generate(const PlantSpec& spec, std::size_t n_sentences);

/// p(descriptor | group cell) under the sampling law.
double descriptor_probability(const PlantSpec& spec, const std::string& cell, const std::string& descriptor);

/// Analytic PMI of a cell or axis group (see pmi::cells_of) with a descriptor
/// over (group, descriptor occurrence) events. Throws LookupError for an
/// unknown descriptor and DataError when the group has zero prior mass.
double expected_pmi(const PlantSpec& spec, const std::string& group, const std::string& descriptor);

struct ExpectedPlane {
    double gender_axis = 0.0;
    double race_axis = 0.0;
};

ExpectedPlane expected_plane(const PlantSpec& spec, const std::string& descriptor);

/// Writes documents.jsonl, annotations.jsonl, gold.jsonl, misspellings.tsv and expectations.json.
void write_corpus(const std::filesystem::path& dir, const PlantSpec& spec, const SynthCorpus& corpus);

}  // namespace histbias::synth
