// Command-line front end: plethysm and syzygy decompositions, cone counts and
// the verification suites.

#include "veronese/characters.hpp"
#include "veronese/cones.hpp"
#include "veronese/koszul.hpp"
#include "veronese/serialization.hpp"
#include "veronese/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace {

using namespace veronese;

enum Exit { ok = 0, check_failed = 1, bad_args = 2, cap_exceeded = 3 };

struct Common {
  std::string format = "json";
  unsigned threads = 0;
  std::uint64_t seed = RunConfig{}.seed;
  std::size_t max_entries = ResourceLimits{}.max_entries;
  std::size_t max_dim = ResourceLimits{}.max_dim;
  std::uint64_t max_nodes = ResourceLimits{}.max_nodes;
  std::string out;

  RunConfig config() const {
    RunConfig cfg;
    cfg.format = format;
    cfg.seed = seed;
    cfg.limits.max_entries = max_entries;
    cfg.limits.max_dim = max_dim;
    cfg.limits.max_nodes = max_nodes;
    cfg.limits.threads = threads;
    return cfg;
  }
};

unsigned default_threads() {
  if (const char* env = std::getenv("VERONESE_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (...) {
    }
    std::cerr << "ignoring invalid VERONESE_THREADS='" << env << "'\n";
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return ok;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) {
    std::cerr << "cannot write " << c.out << '\n';
    return bad_args;
  }
  f << text;
  return ok;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string render(const Common& c, const Json& header, const SchurExpansion& e) {
  if (c.format == "csv") return expansion_csv(e);
  if (c.format == "pretty") {
    std::ostringstream os;
    for (const auto& [k, v] : header.items()) os << "# " << k << " = " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    return os.str() + expansion_pretty(e);
  }
  Json j = header;
  j["expansion"] = to_json(e);
  return dump(j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schur decompositions of plethysms and Veronese syzygy functors"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value configuration file");

  Common c;
  c.threads = default_threads();
  app.add_option("--format", c.format, "json | csv | pretty")->check(CLI::IsMember({"json", "csv", "pretty"}));
  app.add_option("--threads", c.threads, "worker threads (default: VERONESE_THREADS or hardware)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", c.seed, "random seed");
  app.add_option("--max-entries", c.max_entries, "cap on weight-table and block entries")->check(CLI::PositiveNumber);
  app.add_option("--max-dim", c.max_dim, "cap on one side of a differential block")->check(CLI::PositiveNumber);
  app.add_option("--max-nodes", c.max_nodes, "cap on lattice enumeration nodes")->check(CLI::PositiveNumber);
  app.add_option("--out", c.out, "write output to a file");

  int p = 1, q = 1, b = 0, d = 1;
  std::optional<int> n;

  // decompose
  auto* dec = app.add_subcommand("decompose", "decompose tensor/sym/wedge plethysms of S^d");
  std::string kind;
  std::optional<int> tensor_sb;
  dec->add_option("kind", kind, "tensor | sym | wedge")->required()->check(CLI::IsMember({"tensor", "sym", "wedge"}));
  dec->add_option("-p", p, "outer degree")->check(CLI::NonNegativeNumber);
  dec->add_option("-d", d, "inner degree")->check(CLI::NonNegativeNumber);
  dec->add_option("-n", n, "rank of C^n (default p)")->check(CLI::PositiveNumber);
  dec->add_option("--tensor-sb", tensor_sb, "tensor the result with S^b")->check(CLI::NonNegativeNumber);

  // syzygy
  auto* syz = app.add_subcommand("syzygy", "decompose K_{p,q}(C^n, b; d)");
  syz->add_option("-p", p)->check(CLI::NonNegativeNumber);
  syz->add_option("-q", q)->check(CLI::NonNegativeNumber);
  syz->add_option("-b", b)->check(CLI::NonNegativeNumber);
  syz->add_option("-d", d)->check(CLI::PositiveNumber);
  syz->add_option("-n", n, "rank of C^n (default p+1, which sees every Schur functor)")->check(CLI::PositiveNumber);

  // cones
  auto* cones = app.add_subcommand("cones", "lattice counts of the complexity and multiplicity cones");
  int d_min = 1, d_max = 8, d_step = 1;
  cones->add_option("-p", p)->check(CLI::PositiveNumber);
  cones->add_option("--d-min", d_min)->check(CLI::NonNegativeNumber);
  cones->add_option("--d-max", d_max)->check(CLI::NonNegativeNumber);
  cones->add_option("--d-step", d_step)->check(CLI::PositiveNumber);

  // verify
  auto* ver = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  VerifyOptions vopt;
  std::optional<int> vp, vb, vn, vdmin, vdmax, vdstep;
  std::optional<std::string> theorem, tolerance;
  ver->add_option("suite", suite)->required()->check(CLI::IsMember(verify_suites()));
  ver->add_option("--theorem", theorem, "ratios: theorem id")->check(CLI::IsMember(ratio_theorems()));
  ver->add_option("-p", vp)->check(CLI::PositiveNumber);
  ver->add_option("-b", vb)->check(CLI::NonNegativeNumber);
  ver->add_option("-n", vn)->check(CLI::PositiveNumber);
  ver->add_option("--d-min", vdmin)->check(CLI::PositiveNumber);
  ver->add_option("--d-max", vdmax)->check(CLI::PositiveNumber);
  ver->add_option("--d-step", vdstep)->check(CLI::PositiveNumber);
  ver->add_option("--tolerance", tolerance, "ratios: relative tolerance, e.g. 0.1");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? ok : bad_args;
  }

  const RunConfig cfg = c.config();
  try {
    if (*dec) {
      const int nn = n.value_or(std::max(1, p));
      WeightTable t = kind == "tensor" ? char_tensor_sym(p, d, nn, cfg.limits)
                      : kind == "sym"  ? char_sym_sym(p, d, nn, cfg.limits)
                                       : char_wedge_sym(p, d, nn, cfg.limits);
      SchurExpansion e = schur_decompose(t);
      if (tensor_sb) e = tensor_with_sym(e, *tensor_sb);
      Json header = {{"command", "decompose"}, {"kind", kind}, {"p", p}, {"d", d}, {"n", nn}};
      if (tensor_sb) header["tensor_sb"] = *tensor_sb;
      return emit(c, render(c, header, e));
    }
    if (*syz) {
      const KoszulSpec spec{p, q, b, d, n.value_or(default_koszul_n(p))};
      const SchurExpansion e = syzygy_decompose(spec, cfg.limits);
      Json header = {{"command", "syzygy"}, {"p", p}, {"q", q}, {"b", b}, {"d", d}, {"n", spec.n},
                     {"truncated", spec.truncated()}};
      return emit(c, render(c, header, e));
    }
    if (*cones) {
      if (d_min > d_max) throw std::invalid_argument("--d-min exceeds --d-max");
      const auto Y = build_Y(p);
      const auto M = build_multY(p);
      Json rows = Json::array();
      std::vector<std::pair<long, BigInt>> sY, sM;
      bool consistent = true;
      std::string csv = csv_row({"d", "count_Y", "count_multY", "c_check", "N_check"});
      for (int dd = d_min; dd <= d_max; dd += d_step) {
        const BigInt cy = lattice_count(Y, dd, cfg.limits), cm = lattice_count(M, dd, cfg.limits);
        const auto e = schur_decompose(char_tensor_sym(p, dd, p, cfg.limits));
        const BigInt cc = complexity(e), nn = total_multiplicity(e);
        consistent = consistent && cy == cc && cm == nn;
        if (dd > 0) {
          sY.emplace_back(dd, cy);
          sM.emplace_back(dd, cm);
        }
        rows.push_back({{"d", dd}, {"count_Y", cy.str()}, {"count_multY", cm.str()}, {"c_check", cc.str()},
                        {"N_check", nn.str()}});
        csv += csv_row({std::to_string(dd), cy.str(), cm.str(), cc.str(), nn.str()});
      }
      const int degY = p - 1, degM = p * (p - 1) / 2;
      auto fit = [](const std::vector<std::pair<long, BigInt>>& s, int deg) -> Json {
        if (s.size() < static_cast<std::size_t>(deg) + 2) return nullptr;
        const auto f = fit_leading_coefficient(s, deg);
        return {{"degree", deg}, {"estimate", to_string(f.estimate)}, {"residual", to_string(f.residual)}};
      };
      const Json fy = fit(sY, degY), fm = fit(sM, degM);
      std::string text;
      if (c.format == "json") {
        text = dump({{"command", "cones"}, {"p", p}, {"rows", rows}, {"fit_Y", fy}, {"fit_multY", fm},
                     {"consistent", consistent}});
      } else {
        auto field = [](const Json& f, const char* k) { return f.is_null() ? std::string() : f[k].get<std::string>(); };
        csv += csv_row({"fit", field(fy, "estimate"), field(fm, "estimate"), field(fy, "residual"), field(fm, "residual")});
        text = csv;
      }
      const int rc = emit(c, text);
      if (!consistent) {
        std::cerr << "lattice counts disagree with the character computation\n";
        return check_failed;
      }
      return rc;
    }
    if (*ver) {
      vopt.theorem = theorem;
      vopt.p = vp;
      vopt.b = vb;
      vopt.n = vn;
      vopt.d_min = vdmin;
      vopt.d_max = vdmax;
      vopt.d_step = vdstep;
      if (tolerance) vopt.tolerance = parse_rational(*tolerance);
      const Json j = run_verify(suite, cfg, vopt);
      std::string text;
      if (c.format == "json") {
        text = dump(j);
      } else if (c.format == "csv") {
        text = csv_row({"suite", "check", "pass", "detail"});
        for (const auto& ch : j["checks"])
          text += csv_row({suite, ch["name"].get<std::string>(), ch["pass"].get<bool>() ? "true" : "false",
                           ch["detail"].get<std::string>()});
      } else {
        for (const auto& ch : j["checks"])
          text += std::string(ch["pass"].get<bool>() ? "PASS " : "FAIL ") + ch["name"].get<std::string>() +
                  (ch["detail"].get<std::string>().empty() ? "" : "  [" + ch["detail"].get<std::string>() + "]") +
                  "\n";
        text += std::string("suite ") + suite + (j["pass"].get<bool>() ? " passed\n" : " FAILED\n");
      }
      const int rc = emit(c, text);
      return j["pass"].get<bool>() ? rc : check_failed;
    }
  } catch (const ResourceCapExceeded& e) {
    std::cerr << "resource cap exceeded: " << e.what() << '\n';
    return cap_exceeded;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid arguments: " << e.what() << '\n';
    return bad_args;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return check_failed;
  }
  return ok;
}
