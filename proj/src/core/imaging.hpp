#pragma once

#include <cstdint>
#include <vector>

#include "core/geometry.hpp"
#include "core/image.hpp"

namespace viko {

// Marker classification rule: a pixel is marker material when the red channel
// dominates both others by more than t_red (markers are dyed red on a neutral
// background).
struct ThresholdConfig {
    int t_red = 40;
};

struct BlobConfig {
    int min_area = 8;   // px^2
    int max_area = 500; // px^2
};

enum class MorphOp { erode, dilate, open, close };

// Detected marker centroids, sorted lexicographically by (y, x).
struct MarkerSet {
    std::vector<Vec2> centroids;
    std::vector<int> areas;
    int64_t frame_index = 0;

    size_t size() const { return centroids.size(); }
    bool empty() const { return centroids.empty(); }
};

BinaryMask threshold(const Frame& frame, const ThresholdConfig& cfg);

// Disk structuring element of the given radius. Out-of-bounds samples count as
// set for erosion and unset for dilation, which keeps open/close idempotent at
// the image border.
BinaryMask morphology(const BinaryMask& mask, MorphOp op, int radius);

MarkerSet detect_blobs(const BinaryMask& mask, const BlobConfig& cfg, int64_t frame_index = 0);

// 4- or 8-connected component labeling. Labels are assigned in row-major order
// of each component's first pixel, starting at 1; 0 is background.
int label_components(const BinaryMask& mask, std::vector<int32_t>& labels, int connectivity);

} // namespace viko
