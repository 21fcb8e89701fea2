#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "emptybox/geometry.hpp"
#include "emptybox/partitions.hpp"

namespace emptybox {

// Shortest decimal form that parses back to the exact same double.
std::string format_double(double x);
double parse_double(const std::string& text);

// Point CSV: one point per row, comma-separated coordinates, '#' lines are
// comments. Writers emit "# d=<dim>" first so zero-point sets stay
// readable; readers fall back to that hint (or dim_hint) when the file has
// no data rows.
PointSet read_points_csv(std::istream& in, std::size_t dim_hint = 0);
PointSet read_points_csv_file(const std::string& path,
                              std::size_t dim_hint = 0);
void write_points_csv(std::ostream& out, const PointSet& s,
                      const std::vector<std::string>& metadata = {});

// {"hi": [...], "lo": [...], "volume": v}, keys sorted.
std::string box_to_json(const AxisBox& box);

// Partition text: parts separated by '|', elements comma-separated, e.g.
// "1,2|3,4". Families are one partition per line; '#' lines are comments.
std::string partition_to_string(const Partition& p);
Partition parse_partition(const std::string& line);
PartitionFamily read_partition_family(std::istream& in);
void write_partition_family(std::ostream& out, const PartitionFamily& pf);

// Vector text: one vector per line as a string of symbols (0-9 then a-z).
// alphabet 0 infers the size from the largest symbol present (minimum 2).
VectorFamily read_vector_family(std::istream& in, unsigned alphabet = 0);
void write_vector_family(std::ostream& out, const VectorFamily& vf);

}  // namespace emptybox
