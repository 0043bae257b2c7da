#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "core/error.hpp"

namespace viko {

// 8-bit RGB frame, row-major, pixel centers at integer coordinates.
struct Frame {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> data; // width * height * 3
    int64_t index = 0;
    std::optional<double> timestamp;

    Frame() = default;
    Frame(int w, int h) : width(w), height(h), data(static_cast<size_t>(w) * h * 3, 0) {}

    bool valid() const {
        return width > 0 && height > 0 &&
               data.size() == static_cast<size_t>(width) * height * 3;
    }

    const uint8_t* px(int x, int y) const {
        return data.data() + (static_cast<size_t>(y) * width + x) * 3;
    }
    uint8_t* px(int x, int y) {
        return data.data() + (static_cast<size_t>(y) * width + x) * 3;
    }
};

// Single-channel 8-bit image (external segmenter masks, diff maps).
struct ImageU8 {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> data;

    ImageU8() = default;
    ImageU8(int w, int h, uint8_t fill = 0)
        : width(w), height(h), data(static_cast<size_t>(w) * h, fill) {}

    uint8_t at(int x, int y) const { return data[static_cast<size_t>(y) * width + x]; }
    uint8_t& at(int x, int y) { return data[static_cast<size_t>(y) * width + x]; }
};

// Binary mask, one byte per pixel holding 0 or 1.
struct BinaryMask {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> bits;

    BinaryMask() = default;
    BinaryMask(int w, int h) : width(w), height(h), bits(static_cast<size_t>(w) * h, 0) {}

    bool valid() const {
        return width > 0 && height > 0 &&
               bits.size() == static_cast<size_t>(width) * height;
    }

    uint8_t at(int x, int y) const { return bits[static_cast<size_t>(y) * width + x]; }
    void set(int x, int y, uint8_t v) { bits[static_cast<size_t>(y) * width + x] = v; }

    size_t count() const {
        size_t n = 0;
        for (uint8_t b : bits) n += b;
        return n;
    }

    bool operator==(const BinaryMask& o) const {
        return width == o.width && height == o.height && bits == o.bits;
    }
};

// Inclusive-exclusive pixel rectangle [x0, x1) x [y0, y1).
struct Roi {
    int x0 = 0;
    int y0 = 0;
    int x1 = 0;
    int y1 = 0;

    int width() const { return x1 - x0; }
    int height() const { return y1 - y0; }
    int64_t area() const { return static_cast<int64_t>(width()) * height(); }
    bool contains(int x, int y) const { return x >= x0 && x < x1 && y >= y0 && y < y1; }

    static Roi full(int w, int h) { return {0, 0, w, h}; }
    static Roi with_border(int w, int h, int border) {
        Roi r{border, border, w - border, h - border};
        if (r.width() <= 0 || r.height() <= 0)
            throw config_error("ROI border leaves no sensing area");
        return r;
    }
};

inline void require_same_size(const Frame& a, const Frame& b, const char* what) {
    if (a.width != b.width || a.height != b.height)
        throw argument_error(std::string(what) + ": frame dimensions differ");
}

} // namespace viko
