#include "commands.hpp"

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "extremal/bounds.hpp"
#include "extremal/catalog.hpp"
#include "extremal/convergence.hpp"
#include "extremal/distribution_json.hpp"
#include "extremal/measures.hpp"
#include "extremal/special.hpp"
#include "extremal/verify.hpp"

namespace extremal::cli {

namespace {

using nlohmann::json;

class UsageError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  double quad_tol = 1e-10;
  std::size_t mc_samples = 100000;
  std::uint64_t seed = 0;
  std::string format = "csv";
};

struct Inputs {
  std::string dist;
  long n = 1;
  std::string n_grid;
  std::string method = "closed";
  bool normalized = false;
};

std::uint64_t default_seed() {
  const char* env = std::getenv("EXTREMAL_INFO_SEED");
  if (env == nullptr || *env == '\0') {
    return 0;
  }
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used != std::string(env).size()) {
      throw std::invalid_argument("trailing characters");
    }
    return v;
  } catch (const std::exception&) {
    throw UsageError("EXTREMAL_INFO_SEED must be a nonnegative integer");
  }
}

measures::MeasureOptions measure_options(const RunConfig& cfg) {
  measures::MeasureOptions o;
  o.quad_tol = cfg.quad_tol;
  o.mc_samples = cfg.mc_samples;
  o.seed = cfg.seed;
  return o;
}

long parse_count(const std::string& tok) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(tok, &used);
  } catch (const std::exception&) {
    throw UsageError("bad n-grid entry '" + tok + "'");
  }
  if (used != tok.size() || !(v >= 1.0) || v != std::floor(v) || v > 1e15) {
    throw UsageError("n-grid entries must be positive integers, got '" + tok + "'");
  }
  return static_cast<long>(v);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, sep)) {
    out.push_back(tok);
  }
  return out;
}

// "a:b:step" or "n1,n2,..."; entries may use scientific notation.
std::vector<long> parse_n_grid(const std::string& spec) {
  std::vector<long> grid;
  if (spec.find(':') != std::string::npos) {
    const auto parts = split(spec, ':');
    if (parts.size() != 3) {
      throw UsageError("range n-grid must be a:b:step");
    }
    const long a = parse_count(parts[0]);
    const long b = parse_count(parts[1]);
    const long step = parse_count(parts[2]);
    if (b < a) {
      throw UsageError("range n-grid needs a <= b");
    }
    for (long n = a; n <= b; n += step) {
      grid.push_back(n);
    }
  } else {
    for (const auto& tok : split(spec, ',')) {
      if (!tok.empty()) {
        grid.push_back(parse_count(tok));
      }
    }
  }
  if (grid.empty()) {
    throw UsageError("n-grid is empty");
  }
  return grid;
}

std::string params_text(const dist::DistributionSpec& d) {
  std::string s;
  if (d.has_theta()) {
    s = "theta=" + format_number(d.theta());
  }
  if (d.has_nu()) {
    s += ";nu=" + format_number(d.nu());
  }
  if (d.family() == dist::Family::gev) {
    s = "xi=" + format_number(d.xi());
  }
  return s;
}

json params_json(const dist::DistributionSpec& d) {
  json j = dist::to_json(d);
  j.erase("family");
  return j;
}

json ext_json(const ExtendedReal& x) {
  if (x.is_finite()) {
    return x.value();
  }
  return x.to_string();
}

std::string flag(bool b) { return b ? "true" : "false"; }

// Prints rows either as CSV with the given header or as a JSON array.
class Table {
 public:
  explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}

  void add(std::vector<json> cells) { rows_.push_back(std::move(cells)); }

  void print(std::ostream& os, const std::string& format) const {
    if (format == "json") {
      json arr = json::array();
      for (const auto& r : rows_) {
        json obj = json::object();
        for (std::size_t i = 0; i < header_.size(); ++i) {
          obj[header_[i]] = r[i];
        }
        arr.push_back(obj);
      }
      os << arr.dump(2) << "\n";
      return;
    }
    for (std::size_t i = 0; i < header_.size(); ++i) {
      os << (i ? "," : "") << header_[i];
    }
    os << "\n";
    for (const auto& r : rows_) {
      for (std::size_t i = 0; i < r.size(); ++i) {
        os << (i ? "," : "") << cell(r[i]);
      }
      os << "\n";
    }
  }

 private:
  static std::string cell(const json& v) {
    if (v.is_number_float()) {
      return format_number(v.get<double>());
    }
    if (v.is_number_integer()) {
      return std::to_string(v.get<long long>());
    }
    if (v.is_boolean()) {
      return flag(v.get<bool>());
    }
    if (v.is_null()) {
      return "";
    }
    if (v.is_string()) {
      return v.get<std::string>();
    }
    return v.dump();
  }

  std::vector<std::string> header_;
  std::vector<std::vector<json>> rows_;
};

int cmd_measure(const Inputs& in, const RunConfig& cfg) {
  const auto d = dist::parse_distribution(in.dist);
  const auto method = measures::method_from_string(in.method);
  const auto opts = measure_options(cfg);
  const auto h = in.normalized ? measures::shannon_normalized(d, in.n, method, opts)
                               : measures::shannon_max(d, in.n, method, opts);
  const auto j = in.normalized ? measures::extropy_normalized(d, in.n, method, opts)
                               : measures::extropy_max(d, in.n, method, opts);
  const double err = std::max(h.error_estimate, j.error_estimate);
  if (cfg.format == "json") {
    json out = {{"family", std::string(dist::to_string(d.family()))},
                {"params", params_json(d)},
                {"n", in.n},
                {"H", ext_json(h.value)},
                {"J", ext_json(j.value)},
                {"method", std::string(measures::to_string(method))},
                {"error_estimate", err}};
    if (in.normalized) {
      out["normalized"] = true;
    }
    std::cout << out.dump(2) << "\n";
    return kOk;
  }
  Table t({"family", "params", "n", "H", "J", "method", "error_estimate"});
  t.add({std::string(dist::to_string(d.family())), params_text(d), in.n, h.value.to_string(),
         j.value.to_string(), std::string(measures::to_string(method)), err});
  t.print(std::cout, cfg.format);
  return kOk;
}

void add_bounds_row(Table& t, const std::string& measure, const bounds::BoundsReport& r) {
  t.add({measure, r.lower.to_string(), r.value.to_string(), r.upper.to_string(), r.lower_holds,
         r.upper_holds, r.lower_applicable, r.upper_applicable, r.applicable, r.gate_note});
}

int cmd_bounds(const Inputs& in, const RunConfig& cfg) {
  const auto d = dist::parse_distribution(in.dist);
  const auto method = measures::method_from_string(in.method);
  const auto opts = measure_options(cfg);
  Table t({"measure", "lower", "value", "upper", "lower_holds", "upper_holds", "lower_applicable",
           "upper_applicable", "applicable", "gate_note"});
  if (in.normalized) {
    const auto [h, j] = bounds::normalized_bounds(d, in.n);
    add_bounds_row(t, "shannon_normalized", h);
    add_bounds_row(t, "extropy_normalized", j);
  } else {
    add_bounds_row(t, "shannon", bounds::shannon_bounds(d, in.n, method, opts));
    add_bounds_row(t, "extropy", bounds::extropy_bounds(d, in.n, method, opts));
  }
  t.print(std::cout, cfg.format);
  return kOk;
}

int cmd_tables(const RunConfig& cfg) {
  const Catalog& cat = canonical_catalog();
  struct Row {
    std::vector<json> cells;
  };
  const std::size_t per = cat.table_n.size() + 1;
  std::vector<Row> rows(cat.members.size() * per);
  std::vector<std::string> errors(rows.size());

  const long long total = static_cast<long long>(rows.size());
#pragma omp parallel for schedule(dynamic)
  for (long long k = 0; k < total; ++k) {
    const std::size_t idx = static_cast<std::size_t>(k);
    const auto& d = cat.members[idx / per];
    const std::size_t which = idx % per;
    const std::string fam(dist::to_string(d.family()));
    const double ubh = bounds::shannon_limit_upper(d);
    const double ubj = bounds::extropy_limit_upper(d);
    try {
      if (which < cat.table_n.size()) {
        const long n = cat.table_n[which];
        const auto h = measures::cross_check_shannon(d, n, cfg.quad_tol);
        const auto j = measures::cross_check_extropy(d, n, cfg.quad_tol);
        rows[idx].cells = {fam, params_text(d), n, h.closed, h.quadrature, h.gap, ubh,
                           j.closed, j.quadrature, j.gap, ubj};
      } else {
        rows[idx].cells = {fam, params_text(d), "limit", measures::shannon_limit(d).to_string(), nullptr,
                           nullptr, ubh, measures::extropy_limit(d).to_string(), nullptr, nullptr, ubj};
      }
    } catch (const std::exception& e) {
      errors[idx] = d.describe() + ": " + e.what();
    }
  }
  for (const auto& e : errors) {
    if (!e.empty()) {
      throw std::domain_error(e);
    }
  }
  Table t({"family", "params", "n", "H_closed", "H_quad", "H_gap", "H_UB", "J_closed", "J_quad",
           "J_gap", "J_UB"});
  for (auto& r : rows) {
    t.add(std::move(r.cells));
  }
  t.print(std::cout, cfg.format);
  return kOk;
}

int cmd_figure1(const RunConfig& cfg) {
  const auto d = dist::DistributionSpec::exponential(1.0);
  const double ub = bounds::shannon_limit_upper(d);
  Table t({"n", "H", "UB"});
  for (long n = 1; n <= 50; ++n) {
    t.add({n, measures::shannon_closed(d, n), ub});
  }
  t.print(std::cout, cfg.format);
  return kOk;
}

int cmd_converge(const Inputs& in, const RunConfig& cfg) {
  const auto d = dist::parse_distribution(in.dist);
  if (in.n_grid.empty()) {
    throw UsageError("converge needs --n-grid");
  }
  const auto grid = parse_n_grid(in.n_grid);
  const auto study = evt::convergence_study(d, grid);
  Table t({"n", "h_normalized", "j_normalized", "h_target", "j_target", "h_gap", "j_gap"});
  for (const auto& r : study.records) {
    t.add({r.n, r.h_normalized, r.j_normalized, r.h_target, r.j_target, r.h_gap, r.j_gap});
  }
  t.print(std::cout, cfg.format);
  std::cerr << "domain=" << evt::to_string(study.domain.domain) << " xi=" << format_number(study.domain.xi)
            << " burn_in=" << study.burn_in << " extension=" << flag(study.extension) << "\n";
  return kOk;
}

int cmd_verify(const RunConfig& cfg) {
  VerifyOptions opts;
  opts.mc_samples = cfg.mc_samples;
  opts.seed = cfg.seed;
  opts.quad_tol = cfg.quad_tol;
  const auto groups = run_verification(opts);
  Table t({"group", "checks", "failures", "status"});
  std::size_t failed = 0;
  for (const auto& g : groups) {
    t.add({g.name, static_cast<long long>(g.checks), static_cast<long long>(g.failures),
           g.passed() ? "pass" : "fail"});
    failed += g.passed() ? 0 : 1;
    for (const auto& m : g.messages) {
      std::cerr << g.name << ": " << m << "\n";
    }
  }
  t.print(std::cout, cfg.format);
  std::cerr << groups.size() - failed << "/" << groups.size() << " invariant groups passed\n";
  return failed == 0 ? kOk : kVerifyFailed;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Entropy and extropy of sample maxima"};
  app.require_subcommand(1);

  RunConfig cfg;
  Inputs in;
  const std::vector<std::string> methods = {"closed", "quad", "mc"};

  auto add_config = [&](CLI::App* sub) {
    sub->add_option("--tol", cfg.quad_tol, "Quadrature absolute tolerance")
        ->check(CLI::PositiveNumber);
    sub->add_option("--samples", cfg.mc_samples, "Monte Carlo sample count")->check(CLI::Range(100.0, 1e12));
    sub->add_option("--seed", cfg.seed, "Monte Carlo seed (default $EXTREMAL_INFO_SEED or 0)");
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  };
  auto add_dist = [&](CLI::App* sub) {
    sub->add_option("--dist", in.dist, "Distribution as JSON, e.g. {\"family\":\"pareto\",\"nu\":2}")->required();
  };

  auto* measure = app.add_subcommand("measure", "H and J of the sample maximum");
  add_dist(measure);
  measure->add_option("--n", in.n, "Sample size")->required()->check(CLI::PositiveNumber);
  measure->add_option("--method", in.method, "closed, quad or mc")->check(CLI::IsMember(methods));
  measure->add_flag("--normalized", in.normalized, "Use the EVT-normalized maximum");
  add_config(measure);

  auto* bnd = app.add_subcommand("bounds", "Finite-n bounds on H and J");
  add_dist(bnd);
  bnd->add_option("--n", in.n, "Sample size")->required()->check(CLI::PositiveNumber);
  bnd->add_option("--method", in.method, "closed, quad or mc")->check(CLI::IsMember(methods));
  bnd->add_flag("--normalized", in.normalized, "Bounds for the EVT-normalized maximum");
  add_config(bnd);

  auto* tables = app.add_subcommand("tables", "Closed forms vs quadrature on the canonical catalog");
  add_config(tables);

  auto* fig = app.add_subcommand("figure1", "H of the exponential maximum for n = 1..50");
  add_config(fig);

  auto* conv = app.add_subcommand("converge", "Normalized measures against their limits");
  add_dist(conv);
  conv->add_option("--n-grid", in.n_grid, "a:b:step or a comma list")->required();
  add_config(conv);

  auto* ver = app.add_subcommand("verify", "Run the invariant suite");
  add_config(ver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    bool seed_given = false;
    for (auto* sub : app.get_subcommands()) {
      seed_given = seed_given || sub->count("--seed") > 0;
    }
    if (!seed_given) {
      cfg.seed = default_seed();
    }
    if (measure->parsed()) {
      return cmd_measure(in, cfg);
    }
    if (bnd->parsed()) {
      return cmd_bounds(in, cfg);
    }
    if (tables->parsed()) {
      return cmd_tables(cfg);
    }
    if (fig->parsed()) {
      return cmd_figure1(cfg);
    }
    if (conv->parsed()) {
      return cmd_converge(in, cfg);
    }
    if (ver->parsed()) {
      return cmd_verify(cfg);
    }
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  }
  return kUsage;
}

}  // namespace extremal::cli
