#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "histbias/entities.hpp"

namespace histbias::pmi {

/// Cell labels are GroupAssignment::intersection() strings.
const std::vector<std::string>& intersection_cells();

/// Cells making up an axis group (male, female, white, non_white, unknown) or
/// the cell itself for a cell label. Throws LookupError for anything else.
const std::vector<std::string>& cells_of(const std::string& group);

/// Joint counts over (group, descriptor occurrence) events.
class CountTable {
public:
    void add(const std::string& group, const std::string& descriptor, std::uint64_t n = 1);
    void merge(const CountTable& other);

    /// Summed over the cells of `group` (see cells_of for axis names).
    std::uint64_t count(const std::string& group, const std::string& descriptor) const;
    std::uint64_t group_total(const std::string& group) const;
    std::uint64_t descriptor_total(const std::string& descriptor) const;
    std::uint64_t total() const noexcept { return total_; }

    std::vector<std::string> descriptors() const;  ///< sorted
    std::vector<std::string> groups() const;       ///< base groups present, sorted
    bool empty() const noexcept { return total_ == 0; }

    bool operator==(const CountTable&) const = default;

private:
    std::map<std::string, std::map<std::string, std::uint64_t>> cells_;  // group -> descriptor -> n
    std::map<std::string, std::uint64_t> group_totals_;
    std::map<std::string, std::uint64_t> descriptor_totals_;
    std::uint64_t total_ = 0;

    std::uint64_t base_count(const std::string& group, const std::string& descriptor) const;
    std::uint64_t base_group_total(const std::string& group) const;
};

/// Counts every descriptor occurrence under its group. Throws DataError when
/// nothing is counted.
CountTable build_counts(const std::map<std::string, std::vector<std::string>>& descriptor_lists);

/// Descriptor occurrences of entity records under their intersection cell.
CountTable build_counts(const std::vector<entities::EntityRecord>& records);

/// Per-period tables; records of documents absent from `period_of_doc` are skipped.
std::map<std::string, CountTable> build_period_counts(const std::vector<entities::EntityRecord>& records,
                                                      const std::map<std::string, std::string>& period_of_doc);

/// ln(count(a,w) * N / (count(a) * count(w))); nullopt when count(a,w) < min_support
/// or a marginal is zero.
std::optional<double> pmi(const std::string& group, const std::string& descriptor, const CountTable& t,
                          std::uint64_t min_support = 10);

struct PlaneCoordinate {
    std::string descriptor;
    double gender_axis = 0.0;  ///< PMI(female,w) - PMI(male,w)
    double race_axis = 0.0;    ///< PMI(non_white,w) - PMI(white,w)
    std::uint64_t support = 0;  ///< count(w)
};

struct PlaneResult {
    std::vector<PlaneCoordinate> coordinates;  ///< sorted by descriptor
    std::size_t excluded = 0;
};

/// Descriptors whose joint count with each of male, female, white and non_white
/// reaches min_support.
PlaneResult plane_coordinates(const CountTable& t, std::uint64_t min_support = 10);

std::optional<PlaneCoordinate> plane_coordinate(const CountTable& t, const std::string& descriptor,
                                                std::uint64_t min_support = 10);

struct TrajectoryPoint {
    std::string word;
    std::string period;
    std::optional<PlaneCoordinate> coordinate;  ///< empty when the word misses min_support
};

/// One point per (word, period), words in input order, periods in map order.
std::vector<TrajectoryPoint> pmi_temporal(const std::map<std::string, CountTable>& period_tables,
                                          const std::vector<std::string>& words, std::uint64_t min_support = 10);

/// descriptor,gender_axis,race_axis,support,period
std::string plane_csv_header();
std::string plane_csv_rows(const std::vector<PlaneCoordinate>& coords, const std::string& period);

/// word,period,gender_axis,race_axis,support,missing
std::string trajectory_csv(const std::vector<TrajectoryPoint>& points);

}  // namespace histbias::pmi
