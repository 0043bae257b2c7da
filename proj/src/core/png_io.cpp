#include "core/png_io.hpp"

#include <zlib.h>

#include <cstring>
#include <fstream>

namespace viko {

namespace {

const uint8_t kPngSig[8] = {137, 80, 78, 71, 13, 10, 26, 10};

uint32_t be32(const uint8_t* p) {
    return (uint32_t(p[0]) << 24) | (uint32_t(p[1]) << 16) | (uint32_t(p[2]) << 8) | p[3];
}

void put_be32(std::vector<uint8_t>& out, uint32_t v) {
    out.push_back(uint8_t(v >> 24));
    out.push_back(uint8_t(v >> 16));
    out.push_back(uint8_t(v >> 8));
    out.push_back(uint8_t(v));
}

void write_chunk(std::vector<uint8_t>& out, const char type[4], const std::vector<uint8_t>& payload) {
    put_be32(out, uint32_t(payload.size()));
    const size_t start = out.size();
    out.insert(out.end(), type, type + 4);
    out.insert(out.end(), payload.begin(), payload.end());
    const uLong c = crc32(0L, out.data() + start, uInt(out.size() - start));
    put_be32(out, uint32_t(c));
}

std::vector<uint8_t> zlib_deflate(const std::vector<uint8_t>& in) {
    uLongf bound = compressBound(uLong(in.size()));
    std::vector<uint8_t> out(bound);
    if (compress2(out.data(), &bound, in.data(), uLong(in.size()), 6) != Z_OK)
        throw io_error("png: deflate failed");
    out.resize(bound);
    return out;
}

std::vector<uint8_t> zlib_inflate(const std::vector<uint8_t>& in, size_t expected) {
    std::vector<uint8_t> out(expected);
    uLongf len = uLongf(expected);
    const int rc = uncompress(out.data(), &len, in.data(), uLong(in.size()));
    if (rc != Z_OK || len != expected)
        throw parse_error("png: inflate failed or size mismatch");
    return out;
}

struct PngInfo {
    uint32_t width = 0;
    uint32_t height = 0;
    int bit_depth = 0;
    int color_type = 0;
    int channels = 0;
};

// Decodes to unfiltered raw scanlines. Output is `channels` bytes per pixel
// (bit depth 1 is expanded to 0/255 bytes).
std::vector<uint8_t> decode_png(const std::vector<uint8_t>& bytes, PngInfo& info) {
    if (bytes.size() < 8 || std::memcmp(bytes.data(), kPngSig, 8) != 0)
        throw parse_error("png: bad signature");

    std::vector<uint8_t> idat;
    size_t pos = 8;
    bool seen_ihdr = false;
    while (pos + 8 <= bytes.size()) {
        const uint32_t len = be32(&bytes[pos]);
        if (pos + 12 + len > bytes.size())
            throw parse_error("png: truncated chunk");
        const char* type = reinterpret_cast<const char*>(&bytes[pos + 4]);
        const uint8_t* payload = &bytes[pos + 8];
        if (std::memcmp(type, "IHDR", 4) == 0) {
            if (len != 13) throw parse_error("png: bad IHDR");
            info.width = be32(payload);
            info.height = be32(payload + 4);
            info.bit_depth = payload[8];
            info.color_type = payload[9];
            if (payload[12] != 0) throw parse_error("png: interlaced files unsupported");
            seen_ihdr = true;
        } else if (std::memcmp(type, "IDAT", 4) == 0) {
            idat.insert(idat.end(), payload, payload + len);
        } else if (std::memcmp(type, "IEND", 4) == 0) {
            break;
        }
        pos += 12 + len;
    }
    if (!seen_ihdr || info.width == 0 || info.height == 0)
        throw parse_error("png: missing IHDR");

    switch (info.color_type) {
    case 0: info.channels = 1; break;
    case 2: info.channels = 3; break;
    case 4: info.channels = 2; break;
    case 6: info.channels = 4; break;
    default: throw parse_error("png: palette color type unsupported");
    }
    if (info.bit_depth != 8 && !(info.bit_depth == 1 && info.color_type == 0))
        throw parse_error("png: only 8-bit (or 1-bit gray) supported");

    const size_t w = info.width, h = info.height;
    const size_t row_bytes = info.bit_depth == 8
        ? w * info.channels
        : (w + 7) / 8;
    const std::vector<uint8_t> raw = zlib_inflate(idat, (row_bytes + 1) * h);

    const int bpp = info.bit_depth == 8 ? info.channels : 1;
    std::vector<uint8_t> lines(row_bytes * h, 0);
    std::vector<uint8_t> prev(row_bytes, 0);
    for (size_t y = 0; y < h; ++y) {
        const uint8_t filter = raw[y * (row_bytes + 1)];
        const uint8_t* src = &raw[y * (row_bytes + 1) + 1];
        uint8_t* dst = &lines[y * row_bytes];
        for (size_t i = 0; i < row_bytes; ++i) {
            const int a = i >= size_t(bpp) ? dst[i - bpp] : 0;
            const int b = prev[i];
            const int c = i >= size_t(bpp) ? prev[i - bpp] : 0;
            int v = src[i];
            switch (filter) {
            case 0: break;
            case 1: v += a; break;
            case 2: v += b; break;
            case 3: v += (a + b) / 2; break;
            case 4: {
                const int p = a + b - c;
                const int pa = std::abs(p - a), pb = std::abs(p - b), pc = std::abs(p - c);
                v += (pa <= pb && pa <= pc) ? a : (pb <= pc ? b : c);
                break;
            }
            default: throw parse_error("png: unknown filter type");
            }
            dst[i] = uint8_t(v & 0xff);
        }
        std::memcpy(prev.data(), dst, row_bytes);
    }

    if (info.bit_depth == 1) {
        std::vector<uint8_t> expanded(w * h);
        for (size_t y = 0; y < h; ++y)
            for (size_t x = 0; x < w; ++x) {
                const uint8_t byte = lines[y * row_bytes + x / 8];
                expanded[y * w + x] = (byte >> (7 - x % 8)) & 1 ? 255 : 0;
            }
        return expanded;
    }
    return lines;
}

std::vector<uint8_t> read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw io_error("cannot open " + path);
    return std::vector<uint8_t>(std::istreambuf_iterator<char>(f), {});
}

void write_file(const std::string& path, const std::vector<uint8_t>& bytes) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw io_error("cannot write " + path);
    f.write(reinterpret_cast<const char*>(bytes.data()), std::streamsize(bytes.size()));
    if (!f) throw io_error("short write to " + path);
}

std::vector<uint8_t> encode_png(const uint8_t* pixels, int w, int h, int channels, int bit_depth) {
    std::vector<uint8_t> out(kPngSig, kPngSig + 8);

    std::vector<uint8_t> ihdr;
    put_be32(ihdr, uint32_t(w));
    put_be32(ihdr, uint32_t(h));
    ihdr.push_back(uint8_t(bit_depth));
    ihdr.push_back(channels == 3 ? 2 : 0); // RGB or grayscale
    ihdr.push_back(0);
    ihdr.push_back(0);
    ihdr.push_back(0);
    write_chunk(out, "IHDR", ihdr);

    const size_t row_bytes = bit_depth == 8
        ? size_t(w) * channels
        : (size_t(w) + 7) / 8;
    std::vector<uint8_t> raw((row_bytes + 1) * h, 0);
    for (int y = 0; y < h; ++y) {
        raw[size_t(y) * (row_bytes + 1)] = 0; // filter: none
        uint8_t* dst = &raw[size_t(y) * (row_bytes + 1) + 1];
        if (bit_depth == 8) {
            std::memcpy(dst, pixels + size_t(y) * w * channels, row_bytes);
        } else {
            for (int x = 0; x < w; ++x)
                if (pixels[size_t(y) * w + x])
                    dst[x / 8] |= uint8_t(0x80 >> (x % 8));
        }
    }
    write_chunk(out, "IDAT", zlib_deflate(raw));
    write_chunk(out, "IEND", {});
    return out;
}

} // namespace

Frame decode_png_rgb(const std::vector<uint8_t>& bytes) {
    PngInfo info;
    const std::vector<uint8_t> lines = decode_png(bytes, info);
    Frame frame(int(info.width), int(info.height));
    const size_t n = size_t(info.width) * info.height;
    if (info.bit_depth == 1 || info.channels == 1) {
        for (size_t i = 0; i < n; ++i) {
            const uint8_t v = lines[i];
            frame.data[i * 3] = frame.data[i * 3 + 1] = frame.data[i * 3 + 2] = v;
        }
    } else if (info.channels == 2) {
        for (size_t i = 0; i < n; ++i) {
            const uint8_t v = lines[i * 2];
            frame.data[i * 3] = frame.data[i * 3 + 1] = frame.data[i * 3 + 2] = v;
        }
    } else {
        for (size_t i = 0; i < n; ++i) {
            frame.data[i * 3] = lines[i * info.channels];
            frame.data[i * 3 + 1] = lines[i * info.channels + 1];
            frame.data[i * 3 + 2] = lines[i * info.channels + 2];
        }
    }
    return frame;
}

ImageU8 decode_png_gray(const std::vector<uint8_t>& bytes) {
    PngInfo info;
    const std::vector<uint8_t> lines = decode_png(bytes, info);
    ImageU8 img(int(info.width), int(info.height));
    const size_t n = size_t(info.width) * info.height;
    const int step = info.bit_depth == 1 ? 1 : info.channels;
    for (size_t i = 0; i < n; ++i)
        img.data[i] = lines[i * step];
    return img;
}

Frame read_png_rgb(const std::string& path) {
    return decode_png_rgb(read_file(path));
}

ImageU8 read_png_gray(const std::string& path) {
    return decode_png_gray(read_file(path));
}

std::vector<uint8_t> encode_png_rgb(const Frame& frame) {
    if (!frame.valid()) throw argument_error("png: invalid frame");
    return encode_png(frame.data.data(), frame.width, frame.height, 3, 8);
}

std::vector<uint8_t> encode_png_gray(const ImageU8& img) {
    if (img.width <= 0 || img.height <= 0) throw argument_error("png: invalid image");
    return encode_png(img.data.data(), img.width, img.height, 1, 8);
}

void write_png_rgb(const std::string& path, const Frame& frame) {
    write_file(path, encode_png_rgb(frame));
}

void write_png_gray(const std::string& path, const ImageU8& img) {
    write_file(path, encode_png_gray(img));
}

void write_png_mask1(const std::string& path, const BinaryMask& mask) {
    if (!mask.valid()) throw argument_error("png: invalid mask");
    write_file(path, encode_png(mask.bits.data(), mask.width, mask.height, 1, 1));
}

} // namespace viko
