#pragma once

#include "casca/store/point.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace casca::store {

enum class Aggregation { last, mean, min, max, count };

std::string_view to_string(Aggregation agg);
/// Throws ValidationError for an unknown name.
Aggregation aggregation_from_string(std::string_view name);

/// Aggregation of one field over the half-open window (now - window, now].
struct QuerySpec {
    std::string measurement;
    std::string field;
    Aggregation aggregation = Aggregation::last;
    std::int64_t window_s = 0;
    TagSet tag_filter;

    bool operator==(const QuerySpec&) const = default;
};

void validate(const QuerySpec& spec);

/// Grammar: `<agg>(<measurement>.<field>, <int>s) [where k=v[, k=v...]]`.
/// Throws ParseError carrying the offending character offset.
QuerySpec parse_query(std::string_view text);

/// Canonical text form, accepted by parse_query.
std::string serialize(const QuerySpec& spec);

}  // namespace casca::store
