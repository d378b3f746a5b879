#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "histbias/entities.hpp"

namespace histbias::lexicon {

enum class Dimension { valence, arousal, dominance };

std::string to_string(Dimension d);
Dimension parse_dimension(const std::string& s);

struct ValueLexicon {
    Dimension dimension = Dimension::valence;
    std::unordered_map<std::string, double> entries;  ///< lowercase word -> value in [0,1]

    /// `word<TAB>value` lines, '#' comments. Throws ParseError on values outside [0,1]
    /// or duplicate words.
    static ValueLexicon load(const std::filesystem::path& path, Dimension d);
};

/// valence.tsv, arousal.tsv and dominance.tsv from `dir`.
std::vector<ValueLexicon> load_lexica(const std::filesystem::path& dir);

struct Association {
    double value = 0.0;
    double coverage = 0.0;  ///< matched / total descriptor occurrences
    std::uint64_t matched = 0;
    std::uint64_t total = 0;
};

/// Occurrence-weighted mean of lexicon values over descriptors found in the
/// lexicon. Throws DataError naming the group and dimension when none match.
Association association(const ValueLexicon& lex, const std::map<std::string, std::uint64_t>& descriptor_counts,
                        const std::string& group = "");
Association association(const ValueLexicon& lex, const std::vector<std::string>& descriptors,
                        const std::string& group = "");

struct GridCell {
    std::string group;
    Dimension dimension = Dimension::valence;
    std::string period;
    std::optional<Association> result;
    std::string error;  ///< why the cell is missing
};

/// One cell per (group, dimension), groups in map order, dimensions in lexica order.
std::vector<GridCell> association_grid(const std::map<std::string, std::vector<std::string>>& groups,
                                       const std::vector<ValueLexicon>& lexica, const std::string& period = "");

/// Descriptor lists for the axis groups and the four gendered intersection cells.
std::map<std::string, std::vector<std::string>> group_descriptors(const std::vector<entities::EntityRecord>& records);

/// group,dimension,period,value,coverage,matched,total
std::string grid_csv_header();
std::string grid_csv_rows(const std::vector<GridCell>& cells);

}  // namespace histbias::lexicon
