#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kflag/io.hpp"
#include "kflag/oracle.hpp"

namespace {

using namespace kflag;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;
constexpr int kExitResource = 3;

struct CommonArgs {
  std::string type;
  int rank = 0;
  std::string parabolic;
  std::string cache_dir;
  std::string format = "json";
  int degree_cap = -1;
  int jobs = 1;
  std::size_t order_cap = WeylGroup::kDefaultOrderCap;
};

void add_common(CLI::App* cmd, CommonArgs& a) {
  cmd->add_option("--type", a.type, "Cartan type A..G")->required();
  cmd->add_option("--rank", a.rank, "rank (guarded at 6)")->required();
  cmd->add_option("--parabolic", a.parabolic,
                  "parabolic simple-root indices, 1-based, comma separated (e.g. 1,3)");
  cmd->add_option("--cache-dir", a.cache_dir,
                  "directory for basis-class cache files (env KFLAG_CACHE_DIR)");
  cmd->add_option("--format", a.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--degree-cap", a.degree_cap,
                  "per-variable cap for y-expansions (default l(u)+l(v)+|R+|)");
  cmd->add_option("--jobs", a.jobs, "worker threads over (u,v) pairs")->check(CLI::PositiveNumber);
  cmd->add_option("--order-cap", a.order_cap, "Weyl group order cap (resource guard)");
}

std::vector<int> parse_parabolic(const std::string& s, int rank) {
  std::vector<int> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    int v = std::stoi(cur);
    if (v < 1 || v > rank) throw ConfigError("parabolic index " + cur + " out of range");
    out.push_back(v);
    cur.clear();
  };
  for (char c : s) {
    if (c == ',') flush();
    else if (!std::isspace(static_cast<unsigned char>(c))) cur += c;
  }
  flush();
  return out;
}

std::string effective_cache_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("KFLAG_CACHE_DIR")) return env;
  return {};
}

KRing make_ring_checked(const CommonArgs& a) { return KRing(parse_cartan_type(a.type), a.rank, a.order_cap); }

void maybe_cache(const KRing& k, const std::string& dir) {
  if (dir.empty()) return;
  if (!load_cache(k, dir)) save_cache(k, dir);
}

int run_table(const CommonArgs& a, const std::string& basis_name, const std::string& out_path) {
  KRing k = make_ring_checked(a);
  maybe_cache(k, effective_cache_dir(a.cache_dir));
  Basis basis = parse_basis(basis_name);
  json table = build_table(k, basis, parse_parabolic(a.parabolic, a.rank), a.degree_cap, a.jobs);
  std::string payload =
      a.format == "csv" ? table_to_csv(table) : table.dump(1) + "\n";
  if (out_path.empty() || out_path == "-") {
    std::cout << payload;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw ConfigError("cannot write '" + out_path + "'");
    f << payload;
  }
  return kExitOk;
}

int run_verify(const CommonArgs& a, std::vector<std::string> claims, const std::string& subtorus_path,
               const std::string& report_dir, std::optional<std::uint64_t> fault_seed) {
  if (claims.empty()) throw ConfigError("empty claim set");
  KRing k = make_ring_checked(a);
  maybe_cache(k, effective_cache_dir(a.cache_dir));
  std::vector<int> parabolic = parse_parabolic(a.parabolic, a.rank);
  CheckOptions opts;
  opts.degree_cap = a.degree_cap;
  opts.jobs = a.jobs;
  if (fault_seed) opts.fault = FaultSpec{*fault_seed};

  bool all_pass = true;
  for (const std::string& claim : claims) {
    std::vector<PositivityReport> reports;
    if (claim == "grra53") {
      reports.push_back(verify_grra(k, parabolic, opts));
    } else if (claim == "grku52") {
      reports.push_back(verify_grku_prime(k, parabolic, opts));
    } else if (claim == "dualizing") {
      reports.push_back(verify_dualizing(k, opts));
    } else if (claim == "grku51") {
      SubtorusBasis basis = subtorus_path.empty()
                                ? SubtorusBasis::identity(a.rank)
                                : read_subtorus_file(subtorus_path, a.rank);
      reports.push_back(verify_grku_richardson(k, basis, opts));
    } else if (claim == "richardson") {
      reports.push_back(verify_grku_richardson(k, SubtorusBasis::identity(a.rank), opts));
      reports.push_back(verify_grku_richardson(k, SubtorusBasis::all_ones(a.rank), opts));
    } else {
      throw ConfigError("unknown claim '" + claim +
                        "' (expected grku51|grku52|grra53|dualizing|richardson)");
    }
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const PositivityReport& r = reports[i];
      std::string suffix = reports.size() > 1 ? "-" + std::to_string(i) : "";
      std::string path = report_dir + "/report-" + claim + suffix + "-" + r.group + ".json";
      std::ofstream f(path, std::ios::binary);
      if (!f) throw ConfigError("cannot write report '" + path + "'");
      f << report_to_json(r).dump(1) << "\n";
      std::cout << "claim " << claim << suffix << " [" << r.group << "]: "
                << (r.pass() ? "PASS" : "FAIL") << " (instances=" << r.instances_checked
                << ", violations=" << r.violations.size() << ")\n";
      all_pass = all_pass && r.pass();
    }
  }
  return all_pass ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact torus-equivariant K-theory of flag varieties: Schubert structure "
               "constants and sign-alternation verification"};
  app.require_subcommand(1);

  CommonArgs targs, vargs;
  std::string basis_name = "o_upper", out_path, subtorus_path, report_dir = ".";
  std::string claims_csv = "grra53,grku52,dualizing";
  std::optional<std::uint64_t> fault_seed;

  CLI::App* table = app.add_subcommand("table", "compute a structure-constant table");
  add_common(table, targs);
  table->add_option("--basis", basis_name, "o_lower|o_upper|xi_lower|xi_upper|dualizing");
  table->add_option("--out", out_path, "output path (default stdout)");

  CLI::App* verify = app.add_subcommand("verify", "run the positivity claim suites");
  add_common(verify, vargs);
  verify->add_option("--claims", claims_csv,
                     "comma-separated subset of grku51,grku52,grra53,dualizing,richardson");
  verify->add_option("--subtorus", subtorus_path,
                     "integer matrix file (rows = subtorus basis coordinates of the simple roots)");
  verify->add_option("--report-dir", report_dir, "where report JSON files go");
  std::uint64_t seed_raw = 0;
  CLI::Option* fopt = verify->add_option("--fault-inject", seed_raw,
                                         "test hook: perturb one structure constant (seed)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (fopt->count() > 0) fault_seed = seed_raw;
    if (table->parsed()) return run_table(targs, basis_name, out_path);
    std::vector<std::string> claims;
    std::string cur;
    for (char c : claims_csv + ",") {
      if (c == ',') {
        if (!cur.empty()) claims.push_back(cur);
        cur.clear();
      } else if (!std::isspace(static_cast<unsigned char>(c))) {
        cur += c;
      }
    }
    return run_verify(vargs, claims, subtorus_path, report_dir, fault_seed);
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kExitResource;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
}
