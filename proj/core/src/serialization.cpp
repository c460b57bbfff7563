#include "fpp/serialization.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "fpp/errors.hpp"

namespace fpp {

using json = nlohmann::ordered_json;

namespace {

json density_to_json(const OrderDensity& p) {
  switch (p.kind()) {
    case OrderDensity::Kind::Uniform: return {{"kind", "uniform"}, {"scale", p.scale()}};
    case OrderDensity::Kind::Power: return {{"kind", "power"}, {"scale", p.scale()}, {"exponent", p.exponent()}};
    case OrderDensity::Kind::Polynomial: return {{"kind", "polynomial"}, {"coefficients", p.coefficients()}};
    case OrderDensity::Kind::Custom: break;
  }
  detail::throw_domain("spec_to_json", "a uniform, power or polynomial order density");
}

json spec_json(const SubordinatorSpec& spec) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, StableSpec>) {
          return {{"variant", "Stable"}, {"beta", v.beta}};
        } else if constexpr (std::is_same_v<T, TemperedStableSpec>) {
          return {{"variant", "TemperedStable"}, {"beta", v.beta}, {"a", v.a}};
        } else if constexpr (std::is_same_v<T, StableMixtureSpec>) {
          json comps = json::array();
          for (const auto& c : v.components) comps.push_back({{"weight", c.weight}, {"beta", c.beta}});
          return {{"variant", "StableMixture"}, {"components", comps}};
        } else {
          return {{"variant", "DistributedOrder"}, {"density", density_to_json(v.density)}};
        }
      },
      spec.variant());
}

double number(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number()) {
    detail::throw_domain("spec_from_json", std::string("numeric field \"") + key + "\"");
  }
  return j.at(key).get<double>();
}

SubordinatorSpec spec_from(const json& j) {
  if (!j.is_object() || !j.contains("variant") || !j.at("variant").is_string()) {
    detail::throw_domain("spec_from_json", "an object with a string \"variant\"");
  }
  const auto variant = j.at("variant").get<std::string>();
  if (variant == "Stable") return SubordinatorSpec::stable(number(j, "beta"));
  if (variant == "TemperedStable") return SubordinatorSpec::tempered_stable(number(j, "beta"), number(j, "a"));
  if (variant == "StableMixture") {
    if (!j.contains("components") || !j.at("components").is_array()) {
      detail::throw_domain("spec_from_json", "array field \"components\"");
    }
    std::vector<MixtureComponent> comps;
    for (const auto& c : j.at("components")) comps.push_back({number(c, "weight"), number(c, "beta")});
    return SubordinatorSpec::stable_mixture(std::move(comps));
  }
  if (variant == "DistributedOrder") {
    if (!j.contains("density") || !j.at("density").is_object()) {
      detail::throw_domain("spec_from_json", "object field \"density\"");
    }
    const json& d = j.at("density");
    const std::string kind = d.value("kind", "");
    if (kind == "uniform") return SubordinatorSpec::distributed_order(OrderDensity::uniform(d.value("scale", 1.0)));
    if (kind == "power") {
      return SubordinatorSpec::distributed_order(OrderDensity::power(number(d, "scale"), number(d, "exponent")));
    }
    if (kind == "polynomial") {
      if (!d.contains("coefficients") || !d.at("coefficients").is_array()) {
        detail::throw_domain("spec_from_json", "array field \"coefficients\"");
      }
      return SubordinatorSpec::distributed_order(
          OrderDensity::polynomial(d.at("coefficients").get<std::vector<double>>()));
    }
    detail::throw_domain("spec_from_json", "density kind in {uniform, power, polynomial}");
  }
  detail::throw_domain("spec_from_json", "variant in {Stable, TemperedStable, StableMixture, DistributedOrder}");
}

json parse(const std::string& text, const char* where) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    detail::throw_domain(where, std::string("valid JSON (") + e.what() + ")");
  }
}

// Value of key=<token> in a "# a=1 b=2" header; JSON values contain no spaces.
std::string header_field(const std::string& line, const std::string& key) {
  const std::string tag = " " + key + "=";
  const auto at = line.find(tag);
  if (at == std::string::npos) detail::throw_domain("csv header", "field " + key);
  const std::size_t start = at + tag.size();
  const std::size_t end = line.find(' ', start);
  return line.substr(start, end == std::string::npos ? std::string::npos : end - start);
}

double parse_double(const std::string& s) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    detail::throw_domain("csv", "a number, got \"" + s + "\"");
  }
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, sep)) out.push_back(cell);
  return out;
}

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

}  // namespace

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string spec_to_json(const SubordinatorSpec& spec) { return spec_json(spec).dump(); }

SubordinatorSpec spec_from_json(const std::string& text) { return spec_from(parse(text, "spec_from_json")); }

namespace {

template <class Path>
void write_paths(std::ostream& os, const std::string& spec, std::uint64_t seed, const std::vector<Path>& paths,
                 bool sizes) {
  os << "# spec=" << spec << " seed=" << seed << '\n';
  os << (sizes ? "index,jump_time,jump_size\n" : "index,jump_time\n");
  for (std::size_t k = 0; k < paths.size(); ++k) {
    const Path& p = paths[k];
    os << "# path=" << k << " horizon=" << format_double(p.horizon) << '\n';
    for (std::size_t i = 0; i < p.jump_times.size(); ++i) {
      os << (i + 1) << ',' << format_double(p.jump_times[i]);
      if constexpr (std::is_same_v<Path, CTRWPath>) {
        os << ',' << format_double(p.jump_sizes[i]);
      }
      os << '\n';
    }
  }
}

}  // namespace

void write_paths_csv(std::ostream& os, const std::string& spec_json, std::uint64_t seed,
                     const std::vector<RenewalPath>& paths) {
  write_paths(os, spec_json, seed, paths, false);
}

void write_paths_csv(std::ostream& os, const std::string& spec_json, std::uint64_t seed,
                     const std::vector<CTRWPath>& paths) {
  write_paths(os, spec_json, seed, paths, true);
}

PathFile read_paths_csv(std::istream& is) {
  PathFile file;
  std::string line;
  if (!std::getline(is, line) || line.rfind("# spec=", 0) != 0) detail::throw_domain("read_paths_csv", "a # spec= header");
  strip_cr(line);
  file.spec_json = header_field(line, "spec");
  file.seed = std::stoull(header_field(line, "seed"));
  if (!std::getline(is, line)) detail::throw_domain("read_paths_csv", "a column header");
  strip_cr(line);
  if (line == "index,jump_time,jump_size") {
    file.has_sizes = true;
  } else if (line != "index,jump_time") {
    detail::throw_domain("read_paths_csv", "columns index,jump_time[,jump_size]");
  }
  while (std::getline(is, line)) {
    strip_cr(line);
    if (line.empty()) continue;
    if (line.rfind("# path=", 0) == 0) {
      CTRWPath p;
      p.horizon = parse_double(header_field(line, "horizon"));
      file.paths.push_back(std::move(p));
      continue;
    }
    if (file.paths.empty()) detail::throw_domain("read_paths_csv", "a # path= line before jump rows");
    const auto cells = split(line, ',');
    if (cells.size() != (file.has_sizes ? 3u : 2u)) detail::throw_domain("read_paths_csv", "rows matching the columns");
    file.paths.back().jump_times.push_back(parse_double(cells[1]));
    if (file.has_sizes) file.paths.back().jump_sizes.push_back(parse_double(cells[2]));
  }
  return file;
}

namespace {

template <class Path>
std::string paths_json(const std::string& spec, std::uint64_t seed, const std::vector<Path>& paths) {
  json list = json::array();
  for (const auto& p : paths) {
    json item = {{"horizon", p.horizon}, {"jump_times", p.jump_times}};
    if constexpr (std::is_same_v<Path, CTRWPath>) item["jump_sizes"] = p.jump_sizes;
    list.push_back(std::move(item));
  }
  const json j = {{"spec", parse(spec, "paths_to_json")}, {"seed", seed}, {"paths", list}};
  return j.dump();
}

}  // namespace

std::string paths_to_json(const std::string& spec_json, std::uint64_t seed, const std::vector<RenewalPath>& paths) {
  return paths_json(spec_json, seed, paths);
}

std::string paths_to_json(const std::string& spec_json, std::uint64_t seed, const std::vector<CTRWPath>& paths) {
  return paths_json(spec_json, seed, paths);
}

void write_pmf_csv(std::ostream& os, const std::string& spec_json, double lambda, double t,
                   const std::vector<PmfRow>& rows, double tail_mass_bound) {
  os << "# spec=" << spec_json << " lambda=" << format_double(lambda) << " t=" << format_double(t)
     << " tail_mass_bound=" << format_double(tail_mass_bound) << '\n';
  os << "n,prob\n";
  for (const auto& row : rows) os << row.n << ',' << format_double(row.prob) << '\n';
}

void write_pmf_csv(std::ostream& os, const PmfTable& table) {
  write_pmf_csv(os, spec_to_json(table.spec), table.lambda, table.t, table.rows, table.tail_mass_bound);
}

std::string pmf_to_json(const std::string& spec_json, double lambda, double t, const std::vector<PmfRow>& rows,
                        double tail_mass_bound) {
  json list = json::array();
  for (const auto& row : rows) list.push_back({{"n", row.n}, {"prob", row.prob}});
  const json j = {{"spec", parse(spec_json, "pmf_to_json")},
                  {"lambda", lambda},
                  {"t", t},
                  {"tail_mass_bound", tail_mass_bound},
                  {"rows", list}};
  return j.dump(2);
}

std::string pmf_to_json(const PmfTable& table) {
  return pmf_to_json(spec_to_json(table.spec), table.lambda, table.t, table.rows, table.tail_mass_bound);
}

PmfTable read_pmf_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line.rfind("# spec=", 0) != 0) detail::throw_domain("read_pmf_csv", "a # spec= header");
  strip_cr(line);
  PmfTable table{spec_from_json(header_field(line, "spec")), parse_double(header_field(line, "lambda")),
                 parse_double(header_field(line, "t")), {}, parse_double(header_field(line, "tail_mass_bound"))};
  if (!std::getline(is, line)) detail::throw_domain("read_pmf_csv", "columns n,prob");
  strip_cr(line);
  if (line != "n,prob") detail::throw_domain("read_pmf_csv", "columns n,prob");
  while (std::getline(is, line)) {
    strip_cr(line);
    if (line.empty()) continue;
    const auto cells = split(line, ',');
    if (cells.size() != 2) detail::throw_domain("read_pmf_csv", "rows n,prob");
    table.rows.push_back({std::stol(cells[0]), parse_double(cells[1])});
  }
  return table;
}

PmfTable pmf_from_json(const std::string& text) {
  const json j = parse(text, "pmf_from_json");
  try {
    PmfTable table{spec_from(j.at("spec")), j.at("lambda").get<double>(), j.at("t").get<double>(), {},
                   j.at("tail_mass_bound").get<double>()};
    for (const auto& row : j.at("rows")) table.rows.push_back({row.at("n").get<long>(), row.at("prob").get<double>()});
    return table;
  } catch (const json::exception& e) {
    detail::throw_domain("pmf_from_json", std::string("fields spec, lambda, t, tail_mass_bound, rows (") + e.what() + ")");
  }
}

void write_density_csv(std::ostream& os, const std::string& comment,
                       const std::vector<std::pair<double, double>>& points) {
  if (!comment.empty()) os << "# " << comment << '\n';
  os << "x,h\n";
  for (const auto& [x, h] : points) os << format_double(x) << ',' << format_double(h) << '\n';
}

std::string report_to_json(const Report& report) {
  json cases = json::array();
  for (const auto& c : report.cases) {
    cases.push_back({{"name", c.name},
                     {"observed", number_or_null(c.observed)},
                     {"threshold", number_or_null(c.threshold)},
                     {"pass", c.pass}});
  }
  const json j = {{"suite", report.suite}, {"seed", report.seed}, {"cases", cases}};
  return j.dump(2);
}

Report report_from_json(const std::string& text) {
  const json j = parse(text, "report_from_json");
  const auto num = [](const json& v) {
    return v.is_null() ? std::numeric_limits<double>::quiet_NaN() : v.get<double>();
  };
  try {
    Report r;
    r.suite = j.at("suite").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& c : j.at("cases")) {
      r.cases.push_back({c.at("name").get<std::string>(), num(c.at("observed")), num(c.at("threshold")),
                         c.at("pass").get<bool>()});
    }
    return r;
  } catch (const json::exception& e) {
    detail::throw_domain("report_from_json", std::string("fields suite, seed, cases (") + e.what() + ")");
  }
}

}  // namespace fpp
