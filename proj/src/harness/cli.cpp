#include "boolspec/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <thread>

#include <CLI11.hpp>

#include "boolspec/json_io.hpp"

namespace boolspec {

namespace {

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw JsonInputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw JsonInputError(path + ": " + e.what());
  }
}

BooleanFunction read_function(const std::string& path) {
  return function_from_json(read_json_file(path));
}

PointSet read_point_set(const std::string& path) {
  return point_set_from_json(read_json_file(path));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Boolean functions with sparse dyadic spectra: transforms, classification, "
               "affine decompositions and exhaustive checks"};
  app.require_subcommand(1);

  std::string in_path;
  auto add_in = [&](CLI::App* sub) {
    sub->add_option("--in", in_path, "function JSON file")->required();
  };

  bool nonzero_only = false;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "integer-scaled Walsh-Hadamard spectrum");
  add_in(spectrum_cmd);
  spectrum_cmd->add_flag("--nonzero-only", nonzero_only, "omit zero coefficients");

  auto* classify_cmd = app.add_subcommand("classify", "spectral classification");
  add_in(classify_cmd);
  auto* decompose_cmd = app.add_subcommand("decompose", "affine decomposition of the support");
  add_in(decompose_cmd);
  auto* gran_cmd = app.add_subcommand("granularity", "granularity k");
  add_in(gran_cmd);
  auto* sparsity_cmd = app.add_subcommand("sparsity", "number of nonzero coefficients");
  add_in(sparsity_cmd);
  auto* kill_cmd = app.add_subcommand("kill-number", "parity kill number (n <= 8)");
  add_in(kill_cmd);

  std::string family_name;
  int gen_n = -1;
  int gen_k = 0;
  auto* gen_cmd = app.add_subcommand("generate", "instance families");
  gen_cmd->add_option("--family", family_name, "affine|two-affine|counterexample-core|"
                                               "counterexample-padded|intro-fk|intro-gk|delta")
      ->required();
  gen_cmd->add_option("--n", gen_n, "dimension");
  gen_cmd->add_option("--k", gen_k, "family parameter");

  auto* addcomb_cmd = app.add_subcommand("addcomb", "additive combinatorics over F_2^n");
  addcomb_cmd->require_subcommand(1);
  std::string other_path;
  auto* sumset_cmd = addcomb_cmd->add_subcommand("sumset", "A + B (B defaults to A)");
  sumset_cmd->add_option("--in", in_path, "point set JSON")->required();
  sumset_cmd->add_option("--with", other_path, "second point set JSON");
  auto* doubling_cmd = addcomb_cmd->add_subcommand("doubling", "|A + A| / |A|");
  doubling_cmd->add_option("--in", in_path, "point set JSON")->required();
  auto* sumfree_cmd = addcomb_cmd->add_subcommand("sumfree", "(A + A) n A is empty");
  sumfree_cmd->add_option("--in", in_path, "point set JSON")->required();
  auto* laba_cmd = addcomb_cmd->add_subcommand("laba", "small-difference subgroup check");
  laba_cmd->add_option("--in", in_path, "point set JSON")->required();
  std::int64_t num = 0;
  std::int64_t den = 1;
  auto* fk_cmd = addcomb_cmd->add_subcommand("fk", "Even-Zohar s(K) and F(K) for K = num/den");
  fk_cmd->add_option("--num", num, "numerator")->required();
  fk_cmd->add_option("--den", den, "denominator")->required();

  int verify_n = 0;
  std::size_t random_count = 0;
  std::uint64_t seed = 1;
  std::string verify_family;
  std::optional<int> verify_k;
  unsigned threads = std::max(1U, std::thread::hardware_concurrency());
  auto* verify_cmd = app.add_subcommand("verify", "exhaustive (n <= 4) or randomized checks");
  verify_cmd->add_option("--n", verify_n, "dimension")->required();
  verify_cmd->add_option("--random", random_count, "number of random instances (n 5..12)");
  verify_cmd->add_option("--seed", seed, "PRNG seed");
  verify_cmd->add_option("--family", verify_family, "restrict random instances to one family");
  verify_cmd->add_option("--k", verify_k, "family parameter for random instances");
  verify_cmd->add_option("--threads", threads, "worker threads for exhaustive runs");

  std::vector<std::string> argv_store{"boolspec"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  auto emit = [&](const json& j) { out << j.dump(2) << '\n'; };

  try {
    if (*spectrum_cmd) {
      emit(spectrum_to_json(wht(read_function(in_path)), nonzero_only));
    } else if (*classify_cmd) {
      emit(classification_to_json(classify(wht(read_function(in_path)))));
    } else if (*decompose_cmd) {
      emit(decomposition_to_json(decompose(read_function(in_path))));
    } else if (*gran_cmd) {
      emit(json{{"granularity", granularity(wht(read_function(in_path)))}});
    } else if (*sparsity_cmd) {
      emit(json{{"sparsity", sparsity(wht(read_function(in_path)))}});
    } else if (*kill_cmd) {
      emit(json{{"kill_number", kill_number(read_function(in_path))}});
    } else if (*gen_cmd) {
      const auto family = family_from_string(family_name);
      if (!family) throw JsonInputError("unknown family: " + family_name);
      int n = gen_n;
      if (n < 0) {
        if (*family != Family::CounterexampleCore) throw JsonInputError("--n is required");
        n = 6;
      }
      emit(function_to_json(generate(*family, FamilyParams{n, gen_k})));
    } else if (*addcomb_cmd) {
      if (*sumset_cmd) {
        const PointSet a = read_point_set(in_path);
        const PointSet b = other_path.empty() ? a : read_point_set(other_path);
        emit(point_set_to_json(sumset(a, b)));
      } else if (*doubling_cmd) {
        const Fraction d = doubling_constant(read_point_set(in_path));
        emit(json{{"doubling", d.to_string()}, {"num", d.num()}, {"den", d.den()}});
      } else if (*sumfree_cmd) {
        emit(json{{"sum_free", is_sum_free(read_point_set(in_path))}});
      } else if (*laba_cmd) {
        emit(json{{"verdict", to_string(laba_check(read_point_set(in_path)))}});
      } else if (*fk_cmd) {
        const Fraction k(num, den);
        emit(json{{"K", k.to_string()},
                  {"s", even_zohar_s(k)},
                  {"F", even_zohar_F(k).to_string()}});
      }
    } else if (*verify_cmd) {
      VerificationReport report;
      if (random_count > 0) {
        RandomVerifyOptions o;
        o.n = verify_n;
        o.count = random_count;
        o.seed = seed;
        if (!verify_family.empty()) {
          o.family = family_from_string(verify_family);
          if (!o.family) throw JsonInputError("unknown family: " + verify_family);
        }
        o.k = verify_k;
        report = random_verify(o);
      } else {
        report = enumerate_verify(verify_n, threads);
      }
      emit(report_to_json(report));
      if (!report.violations.empty()) return kExitVerificationFailure;
    }
  } catch (const OutOfScopeError& e) {
    err << "out of scope: " << e.what() << '\n';
    return kExitOutOfScope;
  } catch (const VerificationFailure& e) {
    err << "verification failure: " << e.what() << '\n';
    emit(decomposition_to_json(e.candidate()));
    return kExitVerificationFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitOk;
}

}  // namespace boolspec
