#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace casca::bus {

std::vector<std::string_view> split_topic(std::string_view topic);

/// MQTT-style subscription filter: `+` matches exactly one segment,
/// a final `#` matches any (possibly empty) remaining suffix.
class TopicPattern {
public:
    /// Throws ValidationError when `#` is not the last segment, a segment
    /// mixes wildcards with text, or the pattern is otherwise malformed.
    explicit TopicPattern(std::string pattern);

    bool matches(std::string_view topic) const;
    const std::string& str() const noexcept { return pattern_; }

private:
    std::string pattern_;
    std::vector<std::string> segments_;
};

}  // namespace casca::bus
