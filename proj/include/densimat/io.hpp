#pragma once

#include <complex>
#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

namespace densimat::io {

/// Binary field dump, format "DMF1": little-endian header
/// [magic "DMF1"][u32 rank][u32 dims[rank]][u32 components], then float64
/// (re, im) interleaved, row-major, component-major blocks.
void dump_dmf1(const std::string& path, const std::vector<uint32_t>& dims, uint32_t components,
               const std::vector<std::complex<double>>& data);

struct Dmf1 {
  std::vector<uint32_t> dims;
  uint32_t components = 0;
  std::vector<std::complex<double>> data;
};
Dmf1 load_dmf1(const std::string& path);

/// CSV writer: header row, then float64 cells with 17 significant digits.
/// No timestamps or other nondeterministic content belongs in these files.
class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::vector<std::string>& header);
  void row(const std::vector<double>& values);

 private:
  std::ofstream out_;
  size_t ncols_;
};

std::string format_g17(double v);

}  // namespace densimat::io
