#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "fpp/distributions.hpp"
#include "fpp/processes.hpp"
#include "fpp/transforms.hpp"
#include "fpp/validation.hpp"

namespace fpp {

// Subordinator specs as JSON objects:
//   {"variant":"Stable","beta":0.5}
//   {"variant":"TemperedStable","beta":0.5,"a":1}
//   {"variant":"StableMixture","components":[{"weight":0.5,"beta":0.3},...]}
//   {"variant":"DistributedOrder","density":{"kind":"uniform","scale":1}}
//     kind "power" takes scale and exponent, kind "polynomial" takes coefficients.
// Malformed input or invalid parameters throw DomainError.
std::string spec_to_json(const SubordinatorSpec& spec);
SubordinatorSpec spec_from_json(const std::string& text);

/// Shortest decimal string that reads back to the same double.
std::string format_double(double v);

// Path files:
//   # spec=<json> seed=<u64>
//   # path=<k> horizon=<h>
//   index,jump_time[,jump_size]
//   1,0.52...
// One "# path" block per path; index counts jumps from 1 within the path.
struct PathFile {
  std::string spec_json;
  std::uint64_t seed = 0;
  bool has_sizes = false;
  std::vector<CTRWPath> paths;  // jump_sizes empty when has_sizes is false
};

void write_paths_csv(std::ostream& os, const std::string& spec_json, std::uint64_t seed,
                     const std::vector<RenewalPath>& paths);
void write_paths_csv(std::ostream& os, const std::string& spec_json, std::uint64_t seed,
                     const std::vector<CTRWPath>& paths);
PathFile read_paths_csv(std::istream& is);

// {"spec":{...},"seed":s,"paths":[{"horizon":h,"jump_times":[...][,"jump_sizes":[...]]},...]}
std::string paths_to_json(const std::string& spec_json, std::uint64_t seed, const std::vector<RenewalPath>& paths);
std::string paths_to_json(const std::string& spec_json, std::uint64_t seed, const std::vector<CTRWPath>& paths);

// Pmf tables:
//   # spec=<json> lambda=<l> t=<t> tail_mass_bound=<b>
//   n,prob
// JSON: {"spec":{...},"lambda":l,"t":t,"tail_mass_bound":b,"rows":[{"n":0,"prob":p},...]}
void write_pmf_csv(std::ostream& os, const PmfTable& table);
std::string pmf_to_json(const PmfTable& table);
// Same layouts with the spec already rendered, for tables that have no
// SubordinatorSpec (the Poisson case beta = 1).
void write_pmf_csv(std::ostream& os, const std::string& spec_json, double lambda, double t,
                   const std::vector<PmfRow>& rows, double tail_mass_bound);
std::string pmf_to_json(const std::string& spec_json, double lambda, double t, const std::vector<PmfRow>& rows,
                        double tail_mass_bound);
PmfTable read_pmf_csv(std::istream& is);
PmfTable pmf_from_json(const std::string& text);

// Density evaluations: "# <comment>" then x,h rows.
void write_density_csv(std::ostream& os, const std::string& comment,
                       const std::vector<std::pair<double, double>>& points);

// {"suite":..., "seed":..., "cases":[{"name":..., "observed":..., "threshold":..., "pass":...}]}
// Non-finite observations are written as null and read back as NaN.
std::string report_to_json(const Report& report);
Report report_from_json(const std::string& text);

}  // namespace fpp
