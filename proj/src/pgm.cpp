// Copyright (c) 2026 The subpixreg Authors.
// SPDX-License-Identifier: Apache-2.0

#include "subpixreg/pgm.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>
#include <vector>

namespace subpixreg {

PgmError::PgmError(const std::string& what, std::size_t byte_offset)
    : std::runtime_error(what + " (byte offset " +
                         std::to_string(byte_offset) + ")"),
      offset_(byte_offset) {}

namespace {

// Cursor over the whole file contents; keeps the byte offset for errors.
struct ByteCursor {
  const std::vector<unsigned char>& data;
  std::size_t pos = 0;

  bool eof() const { return pos >= data.size(); }
  int peek() const { return eof() ? -1 : data[pos]; }
  int get() { return eof() ? -1 : data[pos++]; }
};

void skip_header_space(ByteCursor& c) {
  for (;;) {
    int ch = c.peek();
    if (ch == '#') {
      while (!c.eof() && c.get() != '\n') {
      }
    } else if (ch >= 0 && std::isspace(ch)) {
      c.get();
    } else {
      return;
    }
  }
}

long parse_header_int(ByteCursor& c, const char* field) {
  skip_header_space(c);
  if (c.eof() || !std::isdigit(c.peek())) {
    throw PgmError(std::string("malformed PGM header: expected ") + field,
                   c.pos);
  }
  long value = 0;
  while (!c.eof() && std::isdigit(c.peek())) {
    value = value * 10 + (c.get() - '0');
    if (value > std::numeric_limits<int>::max()) {
      throw PgmError(std::string("PGM header field out of range: ") + field,
                     c.pos);
    }
  }
  return value;
}

}  // namespace

Image load_pgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw PgmError("cannot open '" + path.string() + "'", 0);
  }
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
  ByteCursor c{bytes};

  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5') {
    throw PgmError("unsupported magic number (want binary 'P5')", 0);
  }
  c.pos = 2;

  const long w = parse_header_int(c, "width");
  const long h = parse_header_int(c, "height");
  const long maxval = parse_header_int(c, "maxval");
  if (w < 1 || h < 1) {
    throw PgmError("malformed PGM header: non-positive dimensions", c.pos);
  }
  if (maxval < 1 || maxval > 65535) {
    throw PgmError("malformed PGM header: maxval out of [1,65535]", c.pos);
  }
  // Exactly one whitespace byte separates the header from the raster.
  int sep = c.get();
  if (sep < 0 || !std::isspace(sep)) {
    throw PgmError("malformed PGM header: missing raster separator", c.pos);
  }

  const bool wide = maxval > 255;
  const std::size_t bytes_per_sample = wide ? 2 : 1;
  const std::size_t need =
      static_cast<std::size_t>(w) * static_cast<std::size_t>(h) *
      bytes_per_sample;
  if (bytes.size() - c.pos < need) {
    throw PgmError("truncated pixel data: need " + std::to_string(need) +
                       " bytes, have " + std::to_string(bytes.size() - c.pos),
                   bytes.size());
  }

  Image img(h, w);
  std::size_t p = c.pos;
  for (long y = 0; y < h; ++y) {
    for (long x = 0; x < w; ++x) {
      if (wide) {
        const unsigned hi = bytes[p];
        const unsigned lo = bytes[p + 1];
        img(y, x) = static_cast<double>((hi << 8) | lo);
        p += 2;
      } else {
        img(y, x) = static_cast<double>(bytes[p]);
        p += 1;
      }
    }
  }
  return img;
}

void save_pgm(const Image& img, const std::filesystem::path& path,
              int maxval) {
  if (maxval != 255 && maxval != 65535) {
    throw std::invalid_argument("save_pgm: maxval must be 255 or 65535");
  }
  if (img.rows() < 1 || img.cols() < 1) {
    throw std::invalid_argument("save_pgm: empty image");
  }

  const long h = img.rows();
  const long w = img.cols();
  std::vector<unsigned char> raster;
  raster.reserve(static_cast<std::size_t>(w) * h * (maxval > 255 ? 2 : 1));
  for (long y = 0; y < h; ++y) {
    for (long x = 0; x < w; ++x) {
      const double v = img(y, x);
      if (!std::isfinite(v)) {
        throw std::range_error("save_pgm: non-finite intensity at (" +
                               std::to_string(x) + "," + std::to_string(y) +
                               ")");
      }
      const long long q = std::llround(v);
      if (q < 0 || q > maxval) {
        throw std::range_error(
            "save_pgm: intensity " + std::to_string(v) + " at (" +
            std::to_string(x) + "," + std::to_string(y) +
            ") outside [0," + std::to_string(maxval) + "]");
      }
      if (maxval > 255) {
        raster.push_back(static_cast<unsigned char>((q >> 8) & 0xff));
        raster.push_back(static_cast<unsigned char>(q & 0xff));
      } else {
        raster.push_back(static_cast<unsigned char>(q));
      }
    }
  }

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("save_pgm: cannot open '" + path.string() + "'");
  }
  out << "P5\n" << w << " " << h << "\n" << maxval << "\n";
  out.write(reinterpret_cast<const char*>(raster.data()),
            static_cast<std::streamsize>(raster.size()));
  if (!out) {
    throw std::runtime_error("save_pgm: write failed for '" + path.string() +
                             "'");
  }
}

}  // namespace subpixreg
