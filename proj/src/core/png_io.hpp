#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/image.hpp"

namespace viko {

// Minimal PNG support on top of zlib. Covers what the pipeline exchanges:
// 8-bit RGB / grayscale / RGBA (read), 1-bit grayscale masks (read + write),
// non-interlaced only. Palette and 16-bit files are rejected.

Frame read_png_rgb(const std::string& path);
ImageU8 read_png_gray(const std::string& path);          // RGB/RGBA collapse to first channel
ImageU8 decode_png_gray(const std::vector<uint8_t>& bytes);
Frame decode_png_rgb(const std::vector<uint8_t>& bytes);

void write_png_rgb(const std::string& path, const Frame& frame);
void write_png_gray(const std::string& path, const ImageU8& img);
void write_png_mask1(const std::string& path, const BinaryMask& mask); // 1-bit depth

std::vector<uint8_t> encode_png_rgb(const Frame& frame);
std::vector<uint8_t> encode_png_gray(const ImageU8& img);

} // namespace viko
