#include "emptybox/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string_view>

#include "json.hpp"

namespace emptybox {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' ||
                        s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

double parse_double_view(std::string_view text) {
  const std::string_view t = trim(text);
  double value = 0.0;
  const auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc{} || p != t.data() + t.size())
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  return value;
}

std::uint32_t parse_element(std::string_view text) {
  const std::string_view t = trim(text);
  std::uint32_t value = 0;
  const auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc{} || p != t.data() + t.size())
    throw std::invalid_argument("not an element: '" + std::string(text) + "'");
  return value;
}

// recognizes the "d=<dim>" token the point writer puts in its header
std::size_t dim_from_comment(std::string_view line) {
  for (std::string_view field : split(line, ' ')) {
    field = trim(field);
    if (field.size() > 2 && field.substr(0, 2) == "d=") {
      std::size_t d = 0;
      const auto [p, ec] =
          std::from_chars(field.data() + 2, field.data() + field.size(), d);
      if (ec == std::errc{} && p == field.data() + field.size()) return d;
    }
  }
  return 0;
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  const auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc{})
    throw std::runtime_error("format_double: conversion failed");
  return std::string(buf, p);
}

double parse_double(const std::string& text) {
  return parse_double_view(text);
}

PointSet read_points_csv(std::istream& in, std::size_t dim_hint) {
  std::vector<double> coords;
  std::size_t dim = 0;
  std::size_t row = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++row;
    const std::string_view body = trim(line);
    if (body.empty()) continue;
    if (body.front() == '#') {
      if (const std::size_t d = dim_from_comment(body.substr(1));
          d > 0 && dim_hint == 0)
        dim_hint = d;
      continue;
    }
    const auto fields = split(body, ',');
    if (dim == 0)
      dim = fields.size();
    else if (fields.size() != dim)
      throw std::invalid_argument(
          "points csv: row " + std::to_string(row) + " has " +
          std::to_string(fields.size()) + " fields, expected " +
          std::to_string(dim));
    for (std::string_view f : fields) coords.push_back(parse_double_view(f));
  }
  if (dim == 0) {
    if (dim_hint == 0)
      throw std::invalid_argument(
          "points csv: no data rows and no 'd=' header to fix the dimension");
    dim = dim_hint;
  }
  return PointSet(dim, std::move(coords));
}

PointSet read_points_csv_file(const std::string& path, std::size_t dim_hint) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_points_csv(in, dim_hint);
}

void write_points_csv(std::ostream& out, const PointSet& s,
                      const std::vector<std::string>& metadata) {
  out << "# d=" << s.dim() << " n=" << s.size() << "\n";
  for (const std::string& line : metadata) out << "# " << line << "\n";
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < s.dim(); ++j) {
      if (j) out << ',';
      out << format_double(s.coord(i, j));
    }
    out << "\n";
  }
}

std::string box_to_json(const AxisBox& box) {
  nlohmann::json j;
  j["lo"] = box.lo();
  j["hi"] = box.hi();
  j["volume"] = box.volume();
  return j.dump();
}

std::string partition_to_string(const Partition& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += '|';
    for (std::size_t j = 0; j < p[i].size(); ++j) {
      if (j) out += ',';
      out += std::to_string(p[i][j]);
    }
  }
  return out;
}

Partition parse_partition(const std::string& line) {
  Partition p;
  for (std::string_view part : split(trim(line), '|')) {
    std::vector<std::uint32_t> elements;
    for (std::string_view e : split(part, ','))
      elements.push_back(parse_element(e));
    p.push_back(std::move(elements));
  }
  return canonical_partition(std::move(p));
}

PartitionFamily read_partition_family(std::istream& in) {
  std::vector<Partition> members;
  std::uint32_t n = 0;
  std::size_t parts = 0;
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    Partition p = parse_partition(line);
    if (parts == 0)
      parts = p.size();
    else if (p.size() != parts)
      throw std::invalid_argument(
          "partition family: mixed part counts (" + std::to_string(parts) +
          " vs " + std::to_string(p.size()) + ")");
    for (const auto& part : p)
      for (std::uint32_t e : part) n = std::max(n, e);
    members.push_back(std::move(p));
  }
  if (members.empty())
    throw std::invalid_argument("partition family: no partitions in input");
  return PartitionFamily(static_cast<unsigned>(parts), n, std::move(members));
}

void write_partition_family(std::ostream& out, const PartitionFamily& pf) {
  for (const Partition& p : pf.members())
    out << partition_to_string(p) << "\n";
}

VectorFamily read_vector_family(std::istream& in, unsigned alphabet) {
  std::vector<std::vector<std::uint8_t>> vectors;
  unsigned top = 0;
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    std::vector<std::uint8_t> v;
    v.reserve(body.size());
    for (char c : body) {
      const unsigned s = symbol_value(c);
      top = std::max(top, s);
      v.push_back(static_cast<std::uint8_t>(s));
    }
    vectors.push_back(std::move(v));
  }
  if (vectors.empty())
    throw std::invalid_argument("vector family: no vectors in input");
  if (alphabet == 0) alphabet = std::max(top + 1, 2u);
  const std::size_t length = vectors.front().size();
  return VectorFamily(alphabet, length, std::move(vectors));
}

void write_vector_family(std::ostream& out, const VectorFamily& vf) {
  for (const auto& v : vf.vectors()) {
    std::string line;
    line.reserve(v.size());
    for (std::uint8_t s : v) line += symbol_char(s);
    out << line << "\n";
  }
}

}  // namespace emptybox
