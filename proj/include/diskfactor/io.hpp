#ifndef DISKFACTOR_IO_HPP
#define DISKFACTOR_IO_HPP

#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "diskfactor/boundary_function.hpp"
#include "diskfactor/circle.hpp"
#include "diskfactor/factorization.hpp"
#include "diskfactor/grid.hpp"
#include "diskfactor/ideal.hpp"

namespace diskfactor {

std::string format_double(double x);  // shortest round-trip decimal

// CSV with "# key: value" comment lines carrying the resolved run config.
class CsvWriter {
  public:
    explicit CsvWriter(const std::string& path);
    void comment(const std::string& key, const std::string& value);
    void config(const std::map<std::string, std::string>& kv);
    void header(const std::vector<std::string>& columns);
    void row(const std::vector<double>& values);
    void raw_row(const std::string& line);

  private:
    std::ofstream out_;
};

using RunConfig = std::map<std::string, std::string>;

void write_grid_csv(const std::string& path, const ComplexGridFunction& g, const RunConfig& cfg);
void write_outer_csv(const std::string& path, const OuterFunction& o, const RunConfig& cfg);
void write_profile_csv(const std::string& path, const LipProfile& p, const RunConfig& cfg);
void write_table_csv(const std::string& path, const ConvergenceTable& t, const RunConfig& cfg);

std::string set_to_json(const ClosedBoundarySet& E);
ClosedBoundarySet set_from_json(const std::string& text);
std::string inner_to_json(const InnerFunction& U);
InnerFunction inner_from_json(const std::string& text);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

// "points:<theta,...>" (radians) or "json:<path>" with the set schema
ClosedBoundarySet parse_set(const std::string& spec);

PropScenario scenario_from_json(const std::string& text, int default_n, std::uint64_t default_seed);

}  // namespace diskfactor

#endif
