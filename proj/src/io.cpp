#include "densimat/io.hpp"

#include <cstdio>
#include <stdexcept>

namespace densimat::io {

namespace {
void put_u32(std::ofstream& out, uint32_t v) {
  unsigned char b[4] = {static_cast<unsigned char>(v & 0xff),
                        static_cast<unsigned char>((v >> 8) & 0xff),
                        static_cast<unsigned char>((v >> 16) & 0xff),
                        static_cast<unsigned char>((v >> 24) & 0xff)};
  out.write(reinterpret_cast<const char*>(b), 4);
}
uint32_t get_u32(std::ifstream& in) {
  unsigned char b[4];
  in.read(reinterpret_cast<char*>(b), 4);
  return static_cast<uint32_t>(b[0]) | (static_cast<uint32_t>(b[1]) << 8) |
         (static_cast<uint32_t>(b[2]) << 16) | (static_cast<uint32_t>(b[3]) << 24);
}
}  // namespace

void dump_dmf1(const std::string& path, const std::vector<uint32_t>& dims, uint32_t components,
               const std::vector<std::complex<double>>& data) {
  size_t vol = 1;
  for (auto d : dims) vol *= d;
  if (data.size() != vol * components)
    throw std::invalid_argument("dump_dmf1: data size does not match dims*components");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("dump_dmf1: cannot open " + path);
  out.write("DMF1", 4);
  put_u32(out, static_cast<uint32_t>(dims.size()));
  for (auto d : dims) put_u32(out, d);
  put_u32(out, components);
  for (const auto& z : data) {
    const double re = z.real(), im = z.imag();
    out.write(reinterpret_cast<const char*>(&re), 8);
    out.write(reinterpret_cast<const char*>(&im), 8);
  }
}

Dmf1 load_dmf1(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("load_dmf1: cannot open " + path);
  char magic[4];
  in.read(magic, 4);
  if (std::string(magic, 4) != "DMF1") throw std::runtime_error("load_dmf1: bad magic");
  Dmf1 f;
  const uint32_t rank = get_u32(in);
  f.dims.resize(rank);
  size_t vol = 1;
  for (uint32_t i = 0; i < rank; ++i) {
    f.dims[i] = get_u32(in);
    vol *= f.dims[i];
  }
  f.components = get_u32(in);
  f.data.resize(vol * f.components);
  for (auto& z : f.data) {
    double re, im;
    in.read(reinterpret_cast<char*>(&re), 8);
    in.read(reinterpret_cast<char*>(&im), 8);
    z = {re, im};
  }
  if (!in) throw std::runtime_error("load_dmf1: truncated file");
  return f;
}

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

CsvWriter::CsvWriter(const std::string& path, const std::vector<std::string>& header)
    : out_(path), ncols_(header.size()) {
  if (!out_) throw std::runtime_error("CsvWriter: cannot open " + path);
  for (size_t i = 0; i < header.size(); ++i) out_ << (i ? "," : "") << header[i];
  out_ << "\n";
}

void CsvWriter::row(const std::vector<double>& values) {
  if (values.size() != ncols_) throw std::invalid_argument("CsvWriter: column count mismatch");
  for (size_t i = 0; i < values.size(); ++i) out_ << (i ? "," : "") << format_g17(values[i]);
  out_ << "\n";
}

}  // namespace densimat::io
