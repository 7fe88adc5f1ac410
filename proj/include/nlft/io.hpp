#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "nlft/field.hpp"

namespace nlft::io {

/// NLF2 container: "NLF2FLD\0", u32 n, f64 h, u8 domain, 7 zero bytes, then
/// n*n (re, im) f64 pairs in row-major order, all little-endian.
std::vector<unsigned char> encode(const ComplexField& f);
ComplexField decode(const std::vector<unsigned char>& bytes);

void write_field(const std::filesystem::path& path, const ComplexField& f);
/// Throws FormatError on bad magic, truncation or invalid contents, and
/// std::runtime_error if the file cannot be opened.
ComplexField read_field(const std::filesystem::path& path);

/// One row per node: x1,x2,re,im.
void write_csv(const std::filesystem::path& path, const ComplexField& f);

/// Writes text atomically enough for batch use (temp file + rename).
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace nlft::io
