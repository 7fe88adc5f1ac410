#include "nlft/io.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>

#include <fmt/format.h>

namespace nlft::io {

namespace {

constexpr char magic[8] = {'N', 'L', 'F', '2', 'F', 'L', 'D', '\0'};
constexpr std::size_t header_size = 8 + 4 + 8 + 1 + 7;

template <class T>
void put(unsigned char* p, T value)
{
  std::memcpy(p, &value, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) std::reverse(p, p + sizeof(T));
}

template <class T>
T get(const unsigned char* p)
{
  unsigned char raw[sizeof(T)];
  std::memcpy(raw, p, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) std::reverse(raw, raw + sizeof(T));
  T value;
  std::memcpy(&value, raw, sizeof(T));
  return value;
}

}  // namespace

std::vector<unsigned char> encode(const ComplexField& f)
{
  std::vector<unsigned char> out(header_size + 16 * f.size(), 0);
  unsigned char* p = out.data();
  std::memcpy(p, magic, 8);
  put<std::uint32_t>(p + 8, static_cast<std::uint32_t>(f.n()));
  put<double>(p + 12, f.lattice().spacing());
  p[20] = static_cast<unsigned char>(f.lattice().domain());
  p += header_size;
  for (const cplx& c : f.samples()) {
    put<double>(p, c.real());
    put<double>(p + 8, c.imag());
    p += 16;
  }
  return out;
}

ComplexField decode(const std::vector<unsigned char>& bytes)
{
  if (bytes.size() < header_size || std::memcmp(bytes.data(), magic, 8) != 0)
    throw FormatError("not an NLF2 field (bad magic)");
  const auto n = get<std::uint32_t>(bytes.data() + 8);
  const auto h = get<double>(bytes.data() + 12);
  const unsigned tag = bytes[20];
  if (tag > 1) throw FormatError(fmt::format("NLF2: unknown domain tag {}", tag));
  const std::size_t count = static_cast<std::size_t>(n) * n;
  if (bytes.size() != header_size + 16 * count)
    throw FormatError(fmt::format("NLF2: expected {} bytes of samples for n={}, found {}",
                                  16 * count, n, bytes.size() - header_size));
  try {
    Lattice lattice(n, h, static_cast<Domain>(tag));
    CVector v(count);
    const unsigned char* p = bytes.data() + header_size;
    for (std::size_t i = 0; i < count; ++i, p += 16) v[i] = {get<double>(p), get<double>(p + 8)};
    return {lattice, std::move(v)};
  } catch (const FormatError&) {
    throw;
  } catch (const std::exception& e) {
    throw FormatError(fmt::format("NLF2: invalid contents: {}", e.what()));
  }
}

void write_field(const std::filesystem::path& path, const ComplexField& f)
{
  const auto bytes = encode(f);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

ComplexField read_field(const std::filesystem::path& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return decode(bytes);
}

void write_csv(const std::filesystem::path& path, const ComplexField& f)
{
  std::string text = "x1,x2,re,im\n";
  const Lattice& l = f.lattice();
  for (std::size_t i = 0; i < f.size(); ++i) {
    const cplx z = l.point(i);
    fmt::format_to(std::back_inserter(text), "{:.17g},{:.17g},{:.17g},{:.17g}\n", z.real(), z.imag(),
                   f[i].real(), f[i].imag());
  }
  write_text(path, text);
}

void write_text(const std::filesystem::path& path, const std::string& text)
{
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << text;
    if (!out) throw std::runtime_error("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace nlft::io
