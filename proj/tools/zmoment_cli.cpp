// zmoment-cli: reproducible experiments over the zmoment C API.

#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <memory>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zmoment/zmoment.h"

namespace {

using nlohmann::json;

struct Options {
  std::string command;
  double t_max = 0.0;
  double x = 0.0;
  int k = 0;
  int order = 3;
  std::string kind = "LD";
  std::vector<double> t_grid{500, 1000, 2000, 5000};
  std::string format = "json";
  std::string out;
  unsigned threads = 1;
  std::string cache;
  double grid_offset = 0.0;
  bool timing = false;
  zm_precision precision{};
};

struct Failure {
  zm_status status;
  std::string module, operation, reason;
};

void check(zm_status s) {
  if (s != ZM_OK) throw Failure{s, zm_last_error_module(), zm_last_error_operation(), zm_last_error_message()};
}

int exit_code(zm_status s) {
  switch (s) {
    case ZM_ERR_INVALID_ARGUMENT:
    case ZM_ERR_CONFIG:
    case ZM_ERR_DOMAIN:
    case ZM_ERR_ENVELOPE: return 2;
    case ZM_ERR_COUNT_MISMATCH: return 4;
    default: return 3;
  }
}

std::string take(char* s) {
  std::string out = s ? s : "";
  zm_string_free(s);
  return out;
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

class Context {
 public:
  explicit Context(const Options& o) {
    check(zm_context_create(&o.precision, &ctx_));
    check(zm_context_set_threads(ctx_, o.threads));
  }
  ~Context() { zm_context_destroy(ctx_); }
  Context(const Context&) = delete;
  Context& operator=(const Context&) = delete;
  zm_context* get() const { return ctx_; }

 private:
  zm_context* ctx_ = nullptr;
};

class ZeroSet {
 public:
  ZeroSet() = default;
  ~ZeroSet() { zm_zero_set_destroy(set_); }
  ZeroSet(const ZeroSet&) = delete;
  ZeroSet& operator=(const ZeroSet&) = delete;
  zm_zero_set** out() { return &set_; }
  zm_zero_set* get() const { return set_; }

 private:
  zm_zero_set* set_ = nullptr;
};

class Report {
 public:
  ~Report() { zm_report_destroy(r_); }
  zm_report** out() { return &r_; }
  zm_report* get() const { return r_; }

 private:
  zm_report* r_ = nullptr;
};

std::string cache_dir(const Options& o) {
  if (!o.cache.empty()) return o.cache;
  if (const char* env = std::getenv("ZMOMENT_CACHE_DIR")) return env;
  return {};
}

// Scans zeros up to t_max, reusing a cached CSV keyed by (t_max, precision hash).
void load_zeros(const Options& o, const Context& ctx, double t_max, ZeroSet& set) {
  const std::string dir = cache_dir(o);
  std::filesystem::path file;
  if (!dir.empty()) {
    char name[96];
    std::snprintf(name, sizeof name, "zeros_T%s_P%016" PRIx64 ".csv", fmt17(t_max).c_str(),
                  zm_context_precision_hash(ctx.get()));
    file = std::filesystem::path(dir) / name;
    std::ifstream in(file);
    if (in) {
      std::stringstream ss;
      ss << in.rdbuf();
      check(zm_zero_set_from_csv(ss.str().c_str(), set.out()));
      return;
    }
  }
  check(zm_scan_zeros(ctx.get(), t_max, o.grid_offset, set.out()));
  if (!file.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(file.parent_path(), ec);
    const std::string csv = take([&] {
      char* s = nullptr;
      check(zm_zero_set_to_csv(set.get(), 1, &s));
      return s;
    }());
    const auto tmp = file.string() + ".tmp";
    std::ofstream(tmp) << csv;
    std::filesystem::rename(tmp, file, ec);
    if (ec) throw Failure{ZM_ERR_IO, "cli", "cache", "cannot write " + file.string()};
  }
}

json header(const Options& o) {
  return {{"tool", "zmoment-cli"},
          {"version", zm_version()},
          {"command", o.command},
          {"precision",
           {{"abs_tol", o.precision.abs_tol},
            {"rel_tol", o.precision.rel_tol},
            {"max_series_terms", o.precision.max_series_terms}}}};
}

std::string csv_header(const Options& o) {
  std::string s = "# tool=zmoment-cli\n# version=" + std::string(zm_version()) + "\n# command=" + o.command +
                  "\n# precision=abs_tol:" + fmt17(o.precision.abs_tol) + ",rel_tol:" +
                  fmt17(o.precision.rel_tol) + ",max_series_terms:" + std::to_string(o.precision.max_series_terms) +
                  "\n";
  return s;
}

// Returns (json result, csv body) for the selected command.
std::pair<json, std::string> run(const Options& o) {
  const Context ctx(o);
  const bool want_csv = o.format == "csv";
  char* s = nullptr;
  if (o.command == "zeros") {
    ZeroSet set;
    load_zeros(o, ctx, o.t_max, set);
    if (want_csv) {
      check(zm_zero_set_to_csv(set.get(), 0, &s));
      return {json(), take(s)};
    }
    check(zm_zero_set_to_json(set.get(), &s));
    return {json::parse(take(s)), {}};
  }
  if (o.command == "dmoment" || o.command == "cmoment" || o.command == "wmoment") {
    Report r;
    if (o.command == "dmoment") {
      ZeroSet set;
      load_zeros(o, ctx, std::max(o.t_max, 10.0), set);
      check(zm_discrete_moment(ctx.get(), set.get(), o.t_max, r.out()));
    } else if (o.command == "cmoment") {
      check(zm_continuous_moment(ctx.get(), o.k, o.t_max, r.out()));
    } else {
      check(zm_weighted_moment(ctx.get(), o.t_max, r.out()));
    }
    if (want_csv) {
      check(zm_report_to_csv(r.get(), 1, &s));
      return {json(), take(s)};
    }
    check(zm_report_to_json(r.get(), &s));
    return {json::parse(take(s)), {}};
  }
  if (o.command == "asympt" || o.command == "constants") {
    if (o.command == "asympt")
      check(zm_asymptotics_json(o.t_max, &s));
    else
      check(zm_constants_json(o.order, &s));
    json j = json::parse(take(s));
    if (!want_csv) return {j, {}};
    std::string csv = "name,index,value\n";
    if (o.command == "constants") {
      for (std::size_t i = 0; i < j["stieltjes"].size(); ++i)
        csv += "stieltjes," + std::to_string(i) + "," + fmt17(j["stieltjes"][i].get<double>()) + "\n";
      for (std::size_t i = 0; i < j["eta"].size(); ++i)
        csv += "eta," + std::to_string(i) + "," + fmt17(j["eta"][i].get<double>()) + "\n";
      const auto& lc = j["residue_log_deriv_times_dzeta_sq"]["log_coeffs"];
      for (std::size_t i = 0; i < lc.size(); ++i)
        csv += "residue_log_coeff," + std::to_string(i) + "," + fmt17(lc[i].get<double>()) + "\n";
    } else {
      for (const char* block : {"b_block", "c_block", "total", "gonek_leading"}) {
        const auto& p = j[block];
        const double norm = p["normalization"].get<double>();
        for (std::size_t i = 0; i < p["coeffs"].size(); ++i)
          csv += std::string(block) + "," + std::to_string(i) + "," + fmt17(norm * p["coeffs"][i].get<double>()) +
                 "\n";
      }
    }
    return {json(), csv};
  }
  if (o.command == "convsum") {
    if (!(o.x >= 0.0 && o.x <= 1e7)) throw Failure{ZM_ERR_INVALID_ARGUMENT, "cli", "convsum", "--x must lie in [0, 1e7]"};
    zm_coeff_table* table = nullptr;
    check(zm_coeff_table_create(std::max<int64_t>(1, static_cast<int64_t>(o.x)), &table));
    std::unique_ptr<zm_coeff_table, void (*)(zm_coeff_table*)> guard(table, zm_coeff_table_destroy);
    double value = 0.0;
    json j{{"x", o.x}, {"kind", o.kind}};
    if (o.kind == "LD") {
      check(zm_conv_sum_ld(table, o.x, &value));
      if (o.x > 1.0) {
        double res = 0.0;
        check(zm_conv_sum_ld_residue(o.x, &res));
        j["residue_main_term"] = res;
        j["relative_difference"] = (value - res) / res;
      }
    } else if (o.kind == "D_logn") {
      check(zm_weighted_sum(table, o.x, ZM_WEIGHTED_D_LOGN, &value));
    } else {
      check(zm_weighted_sum(table, o.x, ZM_WEIGHTED_ONE_STAR_LOG_LOG2N, &value));
    }
    j["value"] = value;
    if (!want_csv) return {j, {}};
    return {json(), "x,kind,value\n" + fmt17(o.x) + "," + o.kind + "," + fmt17(value) + "\n"};
  }
  if (o.command == "compare") {
    if (o.t_grid.empty()) throw Failure{ZM_ERR_INVALID_ARGUMENT, "cli", "compare", "empty --t-grid"};
    double top = 0.0;
    for (double t : o.t_grid) top = std::max(top, t);
    ZeroSet set;
    load_zeros(o, ctx, top, set);
    char* csv = nullptr;
    check(zm_compare(ctx.get(), set.get(), o.t_grid.data(), o.t_grid.size(), want_csv ? nullptr : &s,
                     want_csv ? &csv : nullptr));
    if (want_csv) return {json(), take(csv)};
    return {json::parse(take(s)), {}};
  }
  throw Failure{ZM_ERR_INVALID_ARGUMENT, "cli", "run", "unknown command " + o.command};
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  zm_precision_default(&o.precision);
  CLI::App app{"Hardy Z-function zeros, discrete and continuous moments, and their main terms"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", o.out, "Output file (default stdout)");
  app.add_option("--threads", o.threads, "Worker cap")->check(CLI::Range(1u, 1024u));
  app.add_option("--cache", o.cache, "Zero-list cache directory (default $ZMOMENT_CACHE_DIR)");
  app.add_option("--abs-tol", o.precision.abs_tol, "Absolute tolerance");
  app.add_option("--rel-tol", o.precision.rel_tol, "Relative tolerance");
  app.add_option("--max-series-terms", o.precision.max_series_terms, "Bernoulli correction term cap");
  app.add_flag("--timing", o.timing, "Add wall time to the output header");

  auto add = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->callback([&o, name] { o.command = name; });
    return sub;
  };
  auto* zeros = add("zeros", "List the zeros of Z(t) on (0, T]");
  zeros->add_option("--t-max", o.t_max, "Height T")->required();
  zeros->add_option("--grid-offset", o.grid_offset, "Scan grid shift as a fraction of one step");
  auto* dm = add("dmoment", "Discrete moment sum Z'(gamma)^2 against the main term");
  dm->add_option("--t-max", o.t_max, "Height T")->required();
  auto* cm = add("cmoment", "Continuous moment int Z^(k)(t)^2 dt against Hall's formula");
  cm->add_option("--t-max", o.t_max, "Height T")->required();
  cm->add_option("--k", o.k, "Derivative order (0 or 1)");
  auto* wm = add("wmoment", "Weighted moment (1/2pi) int log(t/2pi) Z'(t)^2 dt");
  wm->add_option("--t-max", o.t_max, "Height T")->required();
  auto* as = add("asympt", "Main-term polynomials and their values at T");
  as->add_option("--t-max", o.t_max, "Height T")->required();
  auto* co = add("constants", "Stieltjes constants, eta coefficients and the residue polynomial");
  co->add_option("--order", o.order, "Highest Stieltjes index (0..8)");
  auto* cs = add("convsum", "Exact arithmetic partial sums");
  cs->add_option("--x", o.x, "Cutoff x")->required();
  cs->add_option("--kind", o.kind, "Sum kind")->check(CLI::IsMember({"LD", "D_logn", "one_star_log_log2n"}));
  auto* cp = add("compare", "Discrete-moment reports over a grid of heights");
  cp->add_option("--t-grid", o.t_grid, "Comma-separated heights")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    auto [result, csv] = run(o);
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string text;
    if (o.format == "csv") {
      text = csv_header(o);
      if (o.timing) text += "# wall_time_s=" + fmt17(wall) + "\n";
      text += csv;
    } else {
      json h = header(o);
      if (o.timing) h["wall_time_s"] = wall;
      text = json{{"header", h}, {"result", result}}.dump(2) + "\n";
    }
    if (o.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(o.out, std::ios::binary);
      f << text;
      if (!f) throw Failure{ZM_ERR_IO, "cli", "write", "cannot write " + o.out};
    }
    return 0;
  } catch (const Failure& f) {
    json err{{"error",
              {{"module", f.module},
               {"operation", f.operation},
               {"reason", f.reason},
               {"status", zm_status_string(f.status)}}}};
    std::cerr << err.dump() << "\n";
    return exit_code(f.status);
  } catch (const std::exception& e) {
    json err{{"error", {{"module", "cli"}, {"operation", o.command}, {"reason", e.what()}, {"status", "internal"}}}};
    std::cerr << err.dump() << "\n";
    return 3;
  }
}
