#pragma once

#include <cstdint>
#include <vector>

#include "core/geometry.hpp"
#include "core/imaging.hpp"

namespace viko {

// Exact 2D nearest-neighbor index over marker centroids. Ties on distance are
// broken toward the point with the lower (y, x), so queries are deterministic.
class KdTree2 {
public:
    explicit KdTree2(const std::vector<Vec2>& points);

    struct Hit {
        int index = -1;
        double dist2 = 0.0;
    };

    Hit nearest(const Vec2& query) const;
    size_t size() const { return points_.size(); }

private:
    struct Node {
        int point = -1;
        int left = -1;
        int right = -1;
        int axis = 0;
    };

    int build(int lo, int hi, int axis);
    void search(int node, const Vec2& q, Hit& best) const;
    bool better(int candidate, double d2, const Hit& best) const;

    std::vector<Vec2> points_;
    std::vector<int> order_;
    std::vector<Node> nodes_;
    int root_ = -1;
};

struct MatchPair {
    int ref_index = -1;
    int cur_index = -1;
    Vec2 vector; // cur - ref, pixels
};

// Per-marker displacement field against the no-contact reference set.
struct DisplacementField {
    std::vector<MatchPair> pairs;
    std::vector<int> unmatched_ref;
    std::vector<int> unmatched_cur;
};

// Mutual nearest neighbor with a distance cap. Injective both ways by
// construction; markers without an admissible partner go to the unmatched
// lists.
DisplacementField match_markers(const MarkerSet& ref, const MarkerSet& cur,
                                double max_match_distance);

} // namespace viko
