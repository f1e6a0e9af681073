#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace kcn {

// Inclusive publication-year range labeling one analysis window.
struct TimeWindow {
    std::string label;
    int start_year = 0;
    int end_year = 0;

    bool contains(int year) const { return year >= start_year && year <= end_year; }
};

inline TimeWindow make_window(int start_year, int end_year, std::string label = {}) {
    if (start_year > end_year)
        throw std::invalid_argument("window start year exceeds end year");
    if (label.empty())
        label = std::to_string(start_year) + "-" + std::to_string(end_year);
    return TimeWindow{std::move(label), start_year, end_year};
}

// The four windows used throughout the reports when none are configured.
std::vector<TimeWindow> default_windows();

}  // namespace kcn
