// Copyright (c) 2026 The subpixreg Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef SUBPIXREG_PGM_HPP
#define SUBPIXREG_PGM_HPP

#include "subpixreg/image.hpp"

#include <filesystem>
#include <stdexcept>

namespace subpixreg {

/// Raised on malformed or truncated PGM streams. The message carries the
/// byte offset at which parsing failed.
class PgmError : public std::runtime_error {
 public:
  PgmError(const std::string& what, std::size_t byte_offset);
  std::size_t byte_offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Reads a binary PGM (P5) file with 8-bit or 16-bit samples. Integer
/// sample values are preserved exactly; 16-bit samples are big-endian.
Image load_pgm(const std::filesystem::path& path);

/// Writes a binary PGM (P5) file. `maxval` must be 255 or 65535 and all
/// intensities must round into [0, maxval]; out-of-range values are
/// refused rather than clipped.
void save_pgm(const Image& img, const std::filesystem::path& path, int maxval);

}  // namespace subpixreg

#endif  // SUBPIXREG_PGM_HPP
