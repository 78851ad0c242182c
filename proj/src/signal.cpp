// nablafrac: discrete nabla fractional calculus with iterated
// Atangana-Baleanu difference-sum operators.
// SPDX-License-Identifier: Apache-2.0

#include "nablafrac/signal.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace nablafrac {

Signal read_signal_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open signal file: " + path);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty signal file: " + path);
  // tolerate an optional header row
  bool have_origin = false;
  std::int64_t origin = 0, expect = 0;
  std::vector<double> values;
  auto parse_row = [&](const std::string& row) {
    const auto comma = row.find(',');
    if (comma == std::string::npos)
      throw std::runtime_error("malformed CSV row '" + row + "' in " + path);
    std::int64_t t = std::stoll(row.substr(0, comma));
    double v = std::stod(row.substr(comma + 1));
    if (!have_origin) {
      origin = t;
      expect = t;
      have_origin = true;
    }
    if (t != expect)
      throw std::runtime_error("non-consecutive grid point t=" + std::to_string(t) +
                               " in " + path);
    ++expect;
    values.push_back(v);
  };
  if (line != "t,value" && !line.empty()) parse_row(line);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    parse_row(line);
  }
  if (values.empty()) throw std::runtime_error("no grid points in " + path);
  return Signal(origin, std::move(values));
}

void write_signal_csv(const Signal& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write signal file: " + path);
  out << "t,value\n";
  char buf[64];
  for (std::int64_t t = f.origin(); t <= f.horizon(); ++t) {
    std::snprintf(buf, sizeof(buf), "%.17g", f(t));
    out << t << ',' << buf << '\n';
  }
}

}  // namespace nablafrac
