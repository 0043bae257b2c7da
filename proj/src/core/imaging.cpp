#include "core/imaging.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace viko {

BinaryMask threshold(const Frame& frame, const ThresholdConfig& cfg) {
    if (!frame.valid()) throw argument_error("threshold: invalid frame");
    BinaryMask mask(frame.width, frame.height);
    const uint8_t* p = frame.data.data();
    const size_t n = size_t(frame.width) * frame.height;
    for (size_t i = 0; i < n; ++i, p += 3) {
        const int r = p[0], g = p[1], b = p[2];
        mask.bits[i] = (r - std::max(g, b)) > cfg.t_red ? 1 : 0;
    }
    return mask;
}

namespace {

// Chord half-widths of a disk of radius r, one per row offset in [-r, r].
std::vector<int> disk_chords(int radius) {
    std::vector<int> half(2 * radius + 1);
    for (int dy = -radius; dy <= radius; ++dy)
        half[size_t(dy + radius)] = int(std::floor(std::sqrt(double(radius) * radius - double(dy) * dy)));
    return half;
}

BinaryMask erode_or_dilate(const BinaryMask& mask, int radius, bool erode) {
    const int w = mask.width, h = mask.height;
    const std::vector<int> chords = disk_chords(radius);

    // Per-row prefix sums of set pixels for O(1) window counts.
    std::vector<int32_t> prefix(size_t(h) * (w + 1));
    for (int y = 0; y < h; ++y) {
        int32_t* row = &prefix[size_t(y) * (w + 1)];
        const uint8_t* src = &mask.bits[size_t(y) * w];
        row[0] = 0;
        for (int x = 0; x < w; ++x) row[x + 1] = row[x] + src[x];
    }

    BinaryMask out(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            bool all = true, any = false;
            for (int dy = -radius; dy <= radius && (erode ? all : !any); ++dy) {
                const int yy = y + dy;
                if (yy < 0 || yy >= h) continue; // outside rows: set for erode, unset for dilate
                const int cw = chords[size_t(dy + radius)];
                const int lo = std::max(0, x - cw);
                const int hi = std::min(w - 1, x + cw);
                const int32_t* row = &prefix[size_t(yy) * (w + 1)];
                const int32_t cnt = row[hi + 1] - row[lo];
                if (erode) {
                    if (cnt != hi - lo + 1) all = false;
                } else {
                    if (cnt > 0) any = true;
                }
            }
            out.bits[size_t(y) * w + x] = erode ? (all ? 1 : 0) : (any ? 1 : 0);
        }
    }
    return out;
}

} // namespace

BinaryMask morphology(const BinaryMask& mask, MorphOp op, int radius) {
    if (!mask.valid()) throw argument_error("morphology: invalid mask");
    if (radius < 1) throw config_error("morphology: radius must be >= 1");
    if (radius >= std::min(mask.width, mask.height) / 2)
        throw config_error("morphology: radius too large for mask dimensions");

    switch (op) {
    case MorphOp::erode:
        return erode_or_dilate(mask, radius, true);
    case MorphOp::dilate:
        return erode_or_dilate(mask, radius, false);
    case MorphOp::open:
        return erode_or_dilate(erode_or_dilate(mask, radius, true), radius, false);
    case MorphOp::close:
        return erode_or_dilate(erode_or_dilate(mask, radius, false), radius, true);
    }
    throw argument_error("morphology: unknown op");
}

int label_components(const BinaryMask& mask, std::vector<int32_t>& labels, int connectivity) {
    if (connectivity != 4 && connectivity != 8)
        throw argument_error("label_components: connectivity must be 4 or 8");
    const int w = mask.width, h = mask.height;
    labels.assign(size_t(w) * h, 0);

    static const int dx8[] = {1, -1, 0, 0, 1, 1, -1, -1};
    static const int dy8[] = {0, 0, 1, -1, 1, -1, 1, -1};
    const int ndirs = connectivity == 4 ? 4 : 8;

    int32_t next = 0;
    std::vector<int32_t> stack;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const size_t i = size_t(y) * w + x;
            if (!mask.bits[i] || labels[i]) continue;
            ++next;
            labels[i] = next;
            stack.clear();
            stack.push_back(int32_t(i));
            while (!stack.empty()) {
                const int32_t cur = stack.back();
                stack.pop_back();
                const int cx = cur % w, cy = cur / w;
                for (int d = 0; d < ndirs; ++d) {
                    const int nx = cx + dx8[d], ny = cy + dy8[d];
                    if (nx < 0 || nx >= w || ny < 0 || ny >= h) continue;
                    const size_t j = size_t(ny) * w + nx;
                    if (mask.bits[j] && !labels[j]) {
                        labels[j] = next;
                        stack.push_back(int32_t(j));
                    }
                }
            }
        }
    }
    return next;
}

MarkerSet detect_blobs(const BinaryMask& mask, const BlobConfig& cfg, int64_t frame_index) {
    if (!mask.valid()) throw argument_error("detect_blobs: invalid mask");

    std::vector<int32_t> labels;
    const int n = label_components(mask, labels, 8);

    std::vector<int64_t> sx(size_t(n) + 1, 0), sy(size_t(n) + 1, 0);
    std::vector<int> area(size_t(n) + 1, 0);
    for (int y = 0; y < mask.height; ++y) {
        for (int x = 0; x < mask.width; ++x) {
            const int32_t l = labels[size_t(y) * mask.width + x];
            if (!l) continue;
            sx[size_t(l)] += x;
            sy[size_t(l)] += y;
            ++area[size_t(l)];
        }
    }

    struct Blob {
        Vec2 c;
        int area;
    };
    std::vector<Blob> blobs;
    for (int l = 1; l <= n; ++l) {
        const int a = area[size_t(l)];
        if (a < cfg.min_area || a > cfg.max_area) continue;
        blobs.push_back({{double(sx[size_t(l)]) / a, double(sy[size_t(l)]) / a}, a});
    }
    std::sort(blobs.begin(), blobs.end(),
              [](const Blob& a, const Blob& b) { return less_yx(a.c, b.c); });

    MarkerSet out;
    out.frame_index = frame_index;
    out.centroids.reserve(blobs.size());
    out.areas.reserve(blobs.size());
    for (const Blob& b : blobs) {
        out.centroids.push_back(b.c);
        out.areas.push_back(b.area);
    }
    return out;
}

} // namespace viko
