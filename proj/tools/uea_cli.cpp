// command-line front end: expression parsing, JSON output, deterministic
// exit codes (0 ok, 2 parse/validation error, 3 failed --expect)
#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "uea/blocks.hpp"
#include "uea/hbm.hpp"
#include "uea/hopf.hpp"
#include "uea/ito.hpp"
#include "uea/json_io.hpp"
#include "uea/parse.hpp"
#include "uea/rep.hpp"
#include "uea/span.hpp"

using namespace uea;
using nlohmann::json;

namespace {

struct ExpectationFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const json& j, const std::string& out_file) {
  std::cout << j.dump(2) << "\n";
  if (!out_file.empty()) {
    std::ofstream f(out_file);
    if (!f) throw std::runtime_error("cannot open " + out_file);
    f << j.dump(2) << "\n";
  }
}

std::vector<double> parse_double_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
  return out;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

// "1,2;2,1" -> index pairs
std::vector<std::pair<int, int>> parse_pairs(const std::string& s) {
  std::vector<std::pair<int, int>> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ';')) {
    auto comma = item.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("pair must be i,j: " + item);
    out.push_back({std::stoi(item.substr(0, comma)),
                   std::stoi(item.substr(comma + 1))});
  }
  return out;
}

FamilyKind family_kind(const std::string& name) {
  if (name == "casimir") return FamilyKind::Casimir;
  if (name == "p1") return FamilyKind::P1;
  if (name == "p2_nested") return FamilyKind::P2Nested;
  if (name == "klink") return FamilyKind::Klink;
  throw std::invalid_argument("unknown family: " + name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "uea: exact computer algebra for U(gl_d), quantum Markov operators and "
      "Hermitian Brownian minor processes"};
  app.require_subcommand(1);

  int d = 2, p = 0;
  std::string mode = "uea", out_file;
  auto add_session = [&](CLI::App* cmd, bool with_mode = true) {
    cmd->add_option("--d", d, "rank of gl_d")->capture_default_str();
    cmd->add_option("--p", p, "number of scalar blocks in the partition")
        ->capture_default_str();
    if (with_mode)
      cmd->add_option("--mode", mode, "algebra mode: uea | comm")
          ->check(CLI::IsMember({"uea", "comm"}))
          ->capture_default_str();
    cmd->add_option("--out", out_file, "also write the JSON report here");
  };
  auto ctx = [&]() {
    return ParseContext{d, p,
                        mode == "comm" ? ParseMode::Comm : ParseMode::Uea};
  };

  std::function<void()> run;

  // normalize EXPR
  {
    auto* cmd = app.add_subcommand("normalize", "parse and emit PBW form");
    auto expr = std::make_shared<std::string>();
    cmd->add_option("expr", *expr, "expression")->required();
    add_session(cmd);
    cmd->callback([&, expr] {
      run = [&, expr] {
        if (mode == "comm")
          emit(comm_to_json(parse_comm(*expr, ctx())), out_file);
        else
          emit(element_to_json(parse_element(*expr, ctx())), out_file);
      };
    });
  }

  // coproduct EXPR
  {
    auto* cmd = app.add_subcommand("coproduct", "two-leg coproduct expansion");
    auto expr = std::make_shared<std::string>();
    cmd->add_option("expr", *expr, "expression")->required();
    add_session(cmd, false);
    cmd->callback([&, expr] {
      run = [&, expr] {
        mode = "uea";
        emit(tensor_to_json(coproduct(parse_element(*expr, ctx()))), out_file);
      };
    });
  }

  // apply-p EXPR [--iter k]
  {
    auto* cmd = app.add_subcommand("apply-p", "apply the Markov operator P");
    auto expr = std::make_shared<std::string>();
    auto iter = std::make_shared<int>(1);
    cmd->add_option("expr", *expr, "expression")->required();
    cmd->add_option("--iter", *iter, "number of iterations")
        ->capture_default_str();
    add_session(cmd, false);
    cmd->callback([&, expr, iter] {
      run = [&, expr, iter] {
        mode = "uea";
        Element u = parse_element(*expr, ctx());
        emit(element_to_json(apply_P_iter(u, *iter)), out_file);
      };
    });
  }

  // invariant EXPR --p P
  {
    auto* cmd =
        app.add_subcommand("invariant", "infinitesimal K-invariance test");
    auto expr = std::make_shared<std::string>();
    cmd->add_option("expr", *expr, "expression")->required();
    add_session(cmd, false);
    cmd->callback([&, expr] {
      run = [&, expr] {
        mode = "uea";
        Element u = parse_element(*expr, ctx());
        emit(json{{"invariant", is_invariant(u, p)}, {"p", p}, {"d", d}},
             out_file);
      };
    });
  }

  // member TARGET (--gens FILE | --family NAME --kmax K) --bound D
  {
    auto* cmd = app.add_subcommand(
        "member", "degree-bounded subalgebra membership with certificate");
    auto target = std::make_shared<std::string>();
    auto gens_file = std::make_shared<std::string>();
    auto family = std::make_shared<std::string>();
    auto kmax = std::make_shared<int>(0);
    auto bound = std::make_shared<int>(0);
    auto applyp = std::make_shared<int>(0);
    auto expect = std::make_shared<std::string>();
    cmd->add_option("target", *target, "target expression")->required();
    cmd->add_option("--gens", *gens_file,
                    "JSON file {\"generators\": [expr, ...]}");
    cmd->add_option("--family", *family,
                    "named family: casimir | p1 | p2_nested | klink");
    cmd->add_option("--kmax", *kmax, "family truncation (defaults to bound)");
    cmd->add_option("--bound", *bound, "degree bound D")->required();
    cmd->add_option("--apply-p", *applyp,
                    "apply P this many times to the target first");
    cmd->add_option("--expect", *expect, "in-span | not-in-span")
        ->check(CLI::IsMember({"in-span", "not-in-span"}));
    add_session(cmd);
    cmd->callback([&, target, gens_file, family, kmax, bound, applyp,
                   expect] {
      run = [&, target, gens_file, family, kmax, bound, applyp, expect] {
        const int K = *kmax > 0 ? *kmax : *bound;
        std::vector<std::string> gen_exprs;
        if (!gens_file->empty()) {
          std::ifstream f(*gens_file);
          if (!f) throw std::runtime_error("cannot open " + *gens_file);
          json jf = json::parse(f);
          for (const auto& s : jf.at("generators"))
            gen_exprs.push_back(s.get<std::string>());
        } else if (family->empty()) {
          throw std::invalid_argument("need --gens or --family");
        }

        MembershipResult res;
        if (mode == "comm") {
          if (*applyp > 0)
            throw std::invalid_argument("--apply-p needs uea mode");
          std::vector<CommPoly> gens;
          if (!gen_exprs.empty())
            for (const auto& s : gen_exprs)
              gens.push_back(parse_comm(s, ctx()));
          else
            gens = named_family_comm(BlockPartition(d, p),
                                     family_kind(*family), K);
          CommSpan span(gens, *bound);
          res = span.membership(parse_comm(*target, ctx()));
        } else {
          std::vector<Element> gens;
          if (!gen_exprs.empty())
            for (const auto& s : gen_exprs)
              gens.push_back(parse_element(s, ctx()));
          else
            gens = named_family(BlockPartition(d, p), family_kind(*family), K);
          Element t = apply_P_iter(parse_element(*target, ctx()), *applyp);
          UeaSpan span(gens, *bound);
          res = span.membership(t);
        }
        json j = membership_to_json(res);
        j["d"] = d;
        j["p"] = p;
        emit(j, out_file);
        if (*expect == "in-span" && !res.in_span())
          throw ExpectationFailed("expected in-span, got NotInSpanUpToBound");
        if (*expect == "not-in-span" && res.in_span())
          throw ExpectationFailed("expected not-in-span, got InSpan");
      };
    });
  }

  // moment EXPR --n N [--via tensor|P|both]
  {
    auto* cmd =
        app.add_subcommand("moment", "omega(j_n(x)) by tensor and/or P route");
    auto expr = std::make_shared<std::string>();
    auto n = std::make_shared<int>(1);
    auto via = std::make_shared<std::string>("both");
    auto cap = std::make_shared<int64_t>(4096);
    cmd->add_option("expr", *expr, "expression")->required();
    cmd->add_option("--n", *n, "number of tensor sites")->required();
    cmd->add_option("--via", *via, "tensor | P | both")
        ->check(CLI::IsMember({"tensor", "P", "both"}))
        ->capture_default_str();
    cmd->add_option("--cap", *cap, "size cap on d^n")->capture_default_str();
    add_session(cmd, false);
    cmd->callback([&, expr, n, via, cap] {
      run = [&, expr, n, via, cap] {
        mode = "uea";
        Element u = parse_element(*expr, ctx());
        json j{{"d", d}, {"n", *n}};
        std::optional<Scalar> t, v;
        if (*via != "P") t = omega_moment(u, *n, *cap);
        if (*via != "tensor") v = moment_via_P(u, *n);
        if (t) j["tensor"] = t->str();
        if (v) j["viaP"] = v->str();
        if (t && v) j["equal"] = (*t == *v);
        emit(j, out_file);
      };
    });
  }

  // walk-clt --word PAIRS --n N
  {
    auto* cmd = app.add_subcommand(
        "walk-clt", "scaled quantum walk moment vs Brownian limit moment");
    auto word = std::make_shared<std::string>();
    auto n = std::make_shared<int>(1);
    auto cap = std::make_shared<int64_t>(65536);
    cmd->add_option("--word", *word, "entry pairs, e.g. 1,2;2,1")->required();
    cmd->add_option("--n", *n, "walk length")->required();
    cmd->add_option("--cap", *cap, "size cap on d^n")->capture_default_str();
    add_session(cmd, false);
    cmd->callback([&, word, n, cap] {
      run = [&, word, n, cap] {
        auto pairs = parse_pairs(*word);
        WalkMoment wm = scaled_walk_moment(pairs, *n, d, *cap);
        emit(json{{"d", d},
                  {"n", *n},
                  {"word", *word},
                  {"scaled", wm.scaled.str()},
                  {"limit", wm.limit.str()},
                  {"equal", wm.scaled == wm.limit}},
             out_file);
      };
    });
  }

  // mc-run
  {
    auto* cmd =
        app.add_subcommand("mc-run", "sample Hermitian Brownian trajectories");
    auto paths = std::make_shared<int>(1000);
    auto times = std::make_shared<std::string>("1.0");
    auto seed = std::make_shared<uint64_t>(1);
    auto traceless = std::make_shared<bool>(false);
    auto convention = std::make_shared<std::string>("trace");
    auto format = std::make_shared<std::string>("bin");
    auto file = std::make_shared<std::string>();
    cmd->add_option("--paths", *paths, "number of paths")
        ->capture_default_str();
    cmd->add_option("--times", *times, "comma-separated time grid")
        ->capture_default_str();
    cmd->add_option("--seed", *seed, "master seed")->capture_default_str();
    cmd->add_flag("--traceless", *traceless, "project onto H_d^0");
    cmd->add_option("--convention", *convention,
                    "entry normalization: trace | components")
        ->check(CLI::IsMember({"trace", "components"}))
        ->capture_default_str();
    cmd->add_option("--format", *format, "bin | csv")
        ->check(CLI::IsMember({"bin", "csv"}))
        ->capture_default_str();
    cmd->add_option("--ens-out", *file, "ensemble output file")->required();
    add_session(cmd, false);
    cmd->callback([&, paths, times, seed, traceless, convention, format,
                   file] {
      run = [&, paths, times, seed, traceless, convention, format, file] {
        auto grid = parse_double_list(*times);
        auto conv = *convention == "components" ? HbmConvention::Components
                                                : HbmConvention::TraceInner;
        PathEnsemble ens = sample_hbm(d, grid, *paths, *seed, *traceless, conv);
        if (*format == "csv")
          write_ensemble_csv(ens, *file);
        else
          write_ensemble_binary(ens, *file);
        emit(json{{"d", d},
                  {"paths", *paths},
                  {"times", grid},
                  {"seed", *seed},
                  {"traceless", *traceless},
                  {"convention", *convention},
                  {"format", *format},
                  {"file", *file}},
             out_file);
      };
    });
  }

  // spectra
  {
    auto* cmd = app.add_subcommand(
        "spectra", "principal minor eigenvalues and interlacing report");
    auto in = std::make_shared<std::string>();
    auto sizes = std::make_shared<std::string>();
    auto tol = std::make_shared<double>(1e-10);
    auto csv = std::make_shared<std::string>();
    cmd->add_option("--in", *in, "binary ensemble file")->required();
    cmd->add_option("--sizes", *sizes, "minor orders, e.g. 1,2,3")->required();
    cmd->add_option("--tol", *tol, "interlacing tolerance")
        ->capture_default_str();
    cmd->add_option("--csv", *csv, "write eigenvalues CSV here");
    add_session(cmd, false);
    cmd->callback([&, in, sizes, tol, csv] {
      run = [&, in, sizes, tol, csv] {
        PathEnsemble ens = read_ensemble_binary(*in);
        SpectraReport rep = minor_spectra(ens, parse_int_list(*sizes), *tol);
        if (!csv->empty()) {
          std::ofstream f(*csv);
          if (!f) throw std::runtime_error("cannot open " + *csv);
          f << "path,time,size,k,lambda\n";
          for (size_t s = 0; s < rep.sizes.size(); ++s) {
            const int k = rep.sizes[s];
            for (int pth = 0; pth < rep.n_paths; ++pth)
              for (size_t t = 0; t < rep.times.size(); ++t)
                for (int m = 0; m < k; ++m)
                  f << pth << "," << rep.times[t] << "," << k << "," << m + 1
                    << ","
                    << rep.eig[s][(static_cast<size_t>(pth) *
                                       rep.times.size() +
                                   t) *
                                      k +
                                  m]
                    << "\n";
          }
        }
        emit(spectra_to_json(rep), out_file);
      };
    });
  }

  // ito-closure
  {
    auto* cmd = app.add_subcommand(
        "ito-closure", "drift/covariation closure of an invariant family");
    auto bound = std::make_shared<int>(6);
    auto kmax = std::make_shared<int>(3);
    auto family = std::make_shared<std::string>();
    cmd->add_option("--bound", *bound, "span degree bound")
        ->capture_default_str();
    cmd->add_option("--kmax", *kmax, "family truncation")
        ->capture_default_str();
    cmd->add_option("--family", *family,
                    "casimir | p1 | p2_nested | klink (default from --p)");
    add_session(cmd, false);
    cmd->callback([&, bound, kmax, family] {
      run = [&, bound, kmax, family] {
        FamilyKind kind;
        if (!family->empty())
          kind = family_kind(*family);
        else
          kind = p == 0 ? FamilyKind::Casimir
                        : (p == 1 ? FamilyKind::P1 : FamilyKind::P2Nested);
        auto fam = named_family_comm(BlockPartition(d, p), kind, *kmax);
        ClosureReport rep = closure_check(fam, d, *bound);
        json j = closure_to_json(rep);
        j["d"] = d;
        j["p"] = p;
        j["kmax"] = *kmax;
        emit(j, out_file);
      };
    });
  }

  // factor-word
  {
    auto* cmd = app.add_subcommand(
        "factor-word", "trace-word factorization with numeric validation");
    auto word = std::make_shared<std::string>();
    auto samples = std::make_shared<int>(100);
    auto seed = std::make_shared<uint64_t>(20240817);
    cmd->add_option("--word", *word, "block word, e.g. 1,2,2,1")->required();
    cmd->add_option("--samples", *samples, "validation sample count")
        ->capture_default_str();
    cmd->add_option("--seed", *seed, "validation seed")->capture_default_str();
    add_session(cmd, false);
    cmd->callback([&, word, samples, seed] {
      run = [&, word, samples, seed] {
        BlockWord w = parse_int_list(*word);
        FactoredWord fw = factor_trace_word(w, p);
        const int dd = std::max(d, p + 1);
        double err = validate_factored_word(w, fw, dd, p, *samples, *seed);
        emit(json{{"word", w},
                  {"p", p},
                  {"d", dd},
                  {"factors", factored_word_to_json(fw)},
                  {"samples", *samples},
                  {"max_rel_err", err}},
             out_file);
      };
    });
  }

  // markov-diag
  {
    auto* cmd = app.add_subcommand(
        "markov-diag", "exploratory conditional-dependence diagnostic");
    auto in = std::make_shared<std::string>();
    auto times = std::make_shared<std::string>();
    auto sizes = std::make_shared<std::string>();
    auto stat = std::make_shared<std::string>("top");
    auto bins = std::make_shared<int>(8);
    auto boot = std::make_shared<int>(200);
    auto seed = std::make_shared<uint64_t>(12345);
    cmd->add_option("--in", *in, "binary ensemble file")->required();
    cmd->add_option("--times", *times, "t1,t2,t3 on the grid")->required();
    cmd->add_option("--sizes", *sizes, "minor orders")->required();
    cmd->add_option("--stat", *stat, "top | trace | gap")
        ->check(CLI::IsMember({"top", "trace", "gap"}))
        ->capture_default_str();
    cmd->add_option("--bins", *bins, "conditioning bins")
        ->capture_default_str();
    cmd->add_option("--boot", *boot, "bootstrap replicates")
        ->capture_default_str();
    cmd->add_option("--seed", *seed, "bootstrap seed")->capture_default_str();
    add_session(cmd, false);
    cmd->callback([&, in, times, sizes, stat, bins, boot, seed] {
      run = [&, in, times, sizes, stat, bins, boot, seed] {
        PathEnsemble ens = read_ensemble_binary(*in);
        auto ts = parse_double_list(*times);
        if (ts.size() != 3)
          throw std::invalid_argument("--times needs exactly t1,t2,t3");
        MarkovDiagOptions opts;
        opts.statistic = *stat;
        opts.bins = *bins;
        opts.bootstrap = *boot;
        opts.seed = *seed;
        MarkovDiagReport rep = markov_diagnostic(ens, parse_int_list(*sizes),
                                                 ts[0], ts[1], ts[2], opts);
        emit(markov_diag_to_json(rep), out_file);
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    run();
  } catch (const ExpectationFailed& e) {
    std::cout << json{{"error",
                       {{"code", "expectation_failed"}, {"message", e.what()}}}}
                     .dump(2)
              << "\n";
    return 3;
  } catch (const ParseError& e) {
    std::cout << json{{"error",
                       {{"code", "parse_error"},
                        {"message", e.what()},
                        {"position", e.position}}}}
                     .dump(2)
              << "\n";
    return 2;
  } catch (const std::length_error& e) {
    std::cout << json{{"error", {{"code", "size_cap"}, {"message", e.what()}}}}
                     .dump(2)
              << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cout << json{{"error",
                       {{"code", "invalid_argument"}, {"message", e.what()}}}}
                     .dump(2)
              << "\n";
    return 2;
  }
  return 0;
}
