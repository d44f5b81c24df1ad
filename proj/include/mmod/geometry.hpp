#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace mmod {

/// Axis-aligned pixel rectangle.  `left/top` index the first covered pixel,
/// `width/height` count pixels, so the covered index range is
/// [left, left+width) x [top, top+height).
struct Rect {
    std::int64_t left = 0;
    std::int64_t top = 0;
    std::int64_t width = 0;
    std::int64_t height = 0;

    std::int64_t right() const { return left + width; }    // one past last column
    std::int64_t bottom() const { return top + height; }   // one past last row
    std::int64_t area() const { return width * height; }
    bool valid() const { return width > 0 && height > 0; }

    bool operator==(const Rect&) const = default;
};

inline std::int64_t intersection_area(const Rect& a, const Rect& b) {
    const std::int64_t w = std::min(a.right(), b.right()) - std::max(a.left, b.left);
    const std::int64_t h = std::min(a.bottom(), b.bottom()) - std::max(a.top, b.top);
    return std::max<std::int64_t>(0, w) * std::max<std::int64_t>(0, h);
}

/// Intersection over union.  Two rectangles are considered overlapping (for
/// non-max suppression and detection-to-truth matching alike) when this
/// ratio is >= the overlap threshold, 0.5 by default.
inline double overlap_ratio(const Rect& a, const Rect& b) {
    const std::int64_t inter = intersection_area(a, b);
    const std::int64_t uni = a.area() + b.area() - inter;
    return static_cast<double>(inter) / static_cast<double>(uni);
}

constexpr double kDefaultOverlapThreshold = 0.5;

inline bool rects_overlap(const Rect& a, const Rect& b,
                          double threshold = kDefaultOverlapThreshold) {
    return overlap_ratio(a, b) >= threshold;
}

/// A labeling is valid when no two of its rectangles overlap.
inline bool is_valid_labeling(const std::vector<Rect>& rects,
                              double threshold = kDefaultOverlapThreshold) {
    for (std::size_t i = 0; i < rects.size(); ++i)
        for (std::size_t j = i + 1; j < rects.size(); ++j)
            if (rects_overlap(rects[i], rects[j], threshold)) return false;
    return true;
}

/// Relative cost of a missed detection vs. a false alarm.
struct LossWeights {
    double miss = 2.0;
    double false_alarm = 1.0;
};

/// Best-overlapping truth rectangle for a detection, or nullopt when no
/// truth rectangle reaches the overlap threshold.  Ties go to the lowest
/// index.
inline std::optional<std::pair<std::size_t, double>> match_to_truth(
    const Rect& detection, const std::vector<Rect>& truth,
    double threshold = kDefaultOverlapThreshold) {
    std::optional<std::pair<std::size_t, double>> best;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        const double r = overlap_ratio(detection, truth[i]);
        if (r >= threshold && (!best || r > best->second)) best = {i, r};
    }
    return best;
}

struct LossCounts {
    double loss = 0.0;
    std::size_t missed = 0;
    std::size_t false_alarms = 0;
};

/// Detection loss: miss weight per unmatched truth rectangle plus false
/// alarm weight per prediction that matches nothing, or that matches a
/// truth rectangle some earlier prediction already claimed.  Predictions
/// are matched in input order.
inline LossCounts detection_loss(const std::vector<Rect>& predicted,
                                 const std::vector<Rect>& truth,
                                 const LossWeights& lw = {},
                                 double threshold = kDefaultOverlapThreshold) {
    std::vector<char> hit(truth.size(), 0);
    LossCounts out;
    for (const Rect& p : predicted) {
        const auto m = match_to_truth(p, truth, threshold);
        if (m && !hit[m->first])
            hit[m->first] = 1;
        else
            ++out.false_alarms;
    }
    for (char h : hit)
        if (!h) ++out.missed;
    out.loss = lw.miss * static_cast<double>(out.missed) +
               lw.false_alarm * static_cast<double>(out.false_alarms);
    return out;
}

}  // namespace mmod
