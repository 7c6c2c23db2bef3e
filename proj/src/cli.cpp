#include "matalg/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "matalg/criteria.hpp"
#include "matalg/enumeration.hpp"
#include "matalg/error.hpp"
#include "matalg/golden.hpp"
#include "matalg/json_io.hpp"
#include "matalg/oracle.hpp"
#include "matalg/subalgebra.hpp"

namespace matalg::cli {

namespace {

using json_io::json;

/// Raised for --verify / --golden / --recursion disagreements.
class VerifyMismatch : public Error {
 public:
  using Error::Error;
};

json read_json(std::string const& path, std::istream& in) {
  try {
    if (path == "-") return json::parse(in);
    std::ifstream file(path);
    if (!file) throw ParseError("cannot open " + path);
    return json::parse(file);
  } catch (json::exception const& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

class Output {
 public:
  Output(std::string const& path, std::ostream& fallback) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) throw ParseError("cannot write " + path);
    }
    stream_ = file_.is_open() ? &file_ : &fallback;
  }

  std::ostream& stream() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

unsigned worker_threads() {
  if (char const* env = std::getenv("MATALG_THREADS")) {
    try {
      int const v = std::stoi(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (std::exception const&) {
    }
  }
  return 1;
}

struct OracleVerdict {
  int algebra_dimension;
  int commutant_dimension;
  bool decomposable;
  std::vector<IndexSubset> invariant_subsets;
};

OracleVerdict run_oracle(DiagonalSpectrum const& lambda, Matrix const& a) {
  if (a.n() > oracle::kMaxDecompositionScan) {
    throw CapExceeded("oracle verification is capped at n = " + std::to_string(oracle::kMaxDecompositionScan));
  }
  std::vector<Matrix> const mats{lambda.as_matrix(), a};
  OracleVerdict v{oracle::generated_algebra(mats).dimension(), oracle::commutant_basis(mats).dimension(),
                  oracle::is_decomposable(lambda, a), {}};
  if (a.n() >= 2) {
    for (auto const& i : proper_subsets(a.n())) {
      if (oracle::coordinate_subspace_invariant(mats, i)) v.invariant_subsets.push_back(i);
    }
  }
  return v;
}

json verdict_to_json(OracleVerdict const& v) {
  json subsets = json::array();
  for (auto const& i : v.invariant_subsets) subsets.push_back(json_io::subset_to_json(i));
  return {{"algebra_dimension", v.algebra_dimension},
          {"commutant_dimension", v.commutant_dimension},
          {"decomposable", v.decomposable},
          {"invariant_subsets", std::move(subsets)}};
}

std::vector<std::string> disagreements(ClassificationReport const& r, OracleVerdict const& v, int n) {
  std::vector<std::string> out;
  if (r.irreducible != (v.algebra_dimension == n * n)) out.emplace_back("irreducible");
  if (r.schur_irreducible != (v.commutant_dimension == 1)) out.emplace_back("schur_irreducible");
  if (r.indecomposable == v.decomposable) out.emplace_back("indecomposable");
  if (r.invariant_subsets != v.invariant_subsets) out.emplace_back("invariant_subsets");
  return out;
}

struct Options {
  std::string input;
  std::string output;
  double tolerance = 1e-9;
  bool verify = false;
  bool with_diagonal = false;
  bool recursion = false;
  int n = 0;
  bool unlabeled = false;
  bool labeled = false;
  bool stream = false;
  bool golden = false;
  int cap = 6;
};

int classify_command(Options const& o, std::istream& in, std::ostream& out, std::ostream& err) {
  auto const pair = json_io::pair_from_json(read_json(o.input, in), o.tolerance);
  auto const report = classify(pair.lambda, pair.a);
  Output sink(o.output, out);
  sink.stream() << json_io::report_to_json(report).dump(2) << '\n';
  if (o.verify) {
    auto const verdict = run_oracle(pair.lambda, pair.a);
    auto const bad = disagreements(report, verdict, pair.a.n());
    json summary = verdict_to_json(verdict);
    summary["disagreements"] = bad;
    err << summary.dump() << '\n';
    if (!bad.empty()) throw VerifyMismatch("oracle disagrees on: " + json(bad).dump());
  }
  return kOk;
}

int subspaces_command(Options const& o, std::istream& in, std::ostream& out) {
  auto const pair = json_io::pair_from_json(read_json(o.input, in), o.tolerance);
  json subsets = json::array();
  for (auto const& i : invariant_coordinate_subspaces(pair.lambda, pair.a)) {
    subsets.push_back(json_io::subset_to_json(i));
  }
  Output sink(o.output, out);
  sink.stream() << json{{"n", pair.a.n()}, {"invariant_subsets", std::move(subsets)}}.dump(2) << '\n';
  return kOk;
}

int closure_command(Options const& o, std::istream& in, std::ostream& out) {
  Pattern const g = json_io::pattern_from_json(read_json(o.input, in));
  Pattern const closed = pattern_closure(g, o.with_diagonal);
  json result{{"closure", json_io::pattern_to_json(closed)},
              {"with_diagonal", o.with_diagonal},
              {"generating", is_generating(g)},
              {"closure_is_full", closed == Pattern::full(g.n())},
              {"is_pattern_subalgebra", is_pattern_subalgebra(g)},
              {"strongly_connected", strongly_connected(g)},
              {"weakly_connected", weakly_connected(g)}};
  Output sink(o.output, out);
  sink.stream() << result.dump(2) << '\n';
  return kOk;
}

int subalgebras_command(Options const& o, std::ostream& out) {
  if (o.n < 2 || o.n > 12) throw CapExceeded("subalgebras needs 2 <= n <= 12, got " + std::to_string(o.n));
  json listing = json::array();
  for (auto const& s : enumerate_maximal_subalgebras(o.n)) listing.push_back(json_io::subalgebra_to_json(s));
  if (!o.recursion) {
    Output sink(o.output, out);
    sink.stream() << listing.dump(2) << '\n';
    return kOk;
  }
  json derivation = json::array();
  bool matches = true;
  std::vector<IndexSubset> level = proper_subsets(2);
  for (int n = 3; n <= o.n; ++n) {
    if (n == o.n) {
      for (auto const& step : lift_derivation(level)) {
        derivation.push_back({{"parent", json_io::subset_to_json(step.parent)},
                              {"branch", step.branch},
                              {"children",
                               {json_io::subset_to_json(step.children[0]),
                                json_io::subset_to_json(step.children[1])}}});
      }
    }
    try {
      level = lift_subalgebras(level);
    } catch (std::logic_error const&) {
      matches = false;
      break;
    }
    matches = matches && level == proper_subsets(n);
  }
  Output sink(o.output, out);
  sink.stream() << json{{"n", o.n}, {"subalgebras", std::move(listing)}, {"derivation", std::move(derivation)},
                        {"matches_direct", matches}}
                       .dump(2)
                << '\n';
  if (!matches) throw VerifyMismatch("lifted level disagrees with direct enumeration");
  return kOk;
}

EnumerationOptions enumeration_options(Options const& o) {
  return {.labeled_cap = o.cap, .unlabeled_cap = o.cap, .threads = worker_threads()};
}

int enumerate_command(Options const& o, std::ostream& out) {
  auto const options = enumeration_options(o);
  bool const labeled = !o.unlabeled;
  Output sink(o.output, out);
  PatternSink stream;
  if (o.stream) {
    stream = [&](Pattern const& p) { sink.stream() << json_io::pattern_to_json(p).dump() << '\n'; };
  }
  auto const start = std::chrono::steady_clock::now();
  std::uint64_t const count = enumerate_minimal_scc(o.n, labeled, options, stream);
  CountRow row{.n = o.n};
  (labeled ? row.labeled : row.unlabeled) = count;
  row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  sink.stream() << json_io::count_row_to_json(row).dump() << '\n';
  return kOk;
}

int tables_command(Options const& o, std::ostream& out, std::ostream& err) {
  bool labeled = o.labeled;
  bool unlabeled = o.unlabeled;
  if (!labeled && !unlabeled) labeled = unlabeled = true;
  auto const rows = count_table(o.n, labeled, unlabeled, enumeration_options(o));
  Output sink(o.output, out);
  std::vector<std::string> mismatches;
  for (auto const& row : rows) {
    sink.stream() << json_io::count_row_to_json(row).dump() << '\n';
    if (!o.golden) continue;
    auto const idx = static_cast<std::size_t>(row.n - 1);
    if (row.labeled && *row.labeled != golden::kLabeledCounts[idx]) {
      mismatches.push_back("labeled n=" + std::to_string(row.n));
    }
    if (row.unlabeled && *row.unlabeled != golden::kUnlabeledCounts[idx]) {
      mismatches.push_back("unlabeled n=" + std::to_string(row.n));
    }
  }
  if (o.golden) {
    err << json{{"golden", mismatches.empty() ? "pass" : "fail"}, {"mismatches", mismatches}}.dump() << '\n';
    if (!mismatches.empty()) throw VerifyMismatch("golden table mismatch");
  }
  return kOk;
}

int oracle_verify_command(Options const& o, std::istream& in, std::ostream& out) {
  auto const pair = json_io::pair_from_json(read_json(o.input, in), o.tolerance);
  auto const report = classify(pair.lambda, pair.a);
  auto const verdict = run_oracle(pair.lambda, pair.a);
  auto const bad = disagreements(report, verdict, pair.a.n());
  std::vector<Matrix> const units{pair.lambda.as_matrix()};
  json result{{"oracle", verdict_to_json(verdict)},
              {"report", json_io::report_to_json(report)},
              {"shemesh_common_eigenvector", oracle::shemesh_common_eigenvector(pair.lambda.as_matrix(), pair.a)},
              {"disagreements", bad},
              {"agrees", bad.empty()}};
  Output sink(o.output, out);
  sink.stream() << result.dump(2) << '\n';
  if (!bad.empty()) throw VerifyMismatch("oracle disagrees on: " + json(bad).dump());
  return kOk;
}

}  // namespace

int run(std::vector<std::string> const& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Irreducibility of (Lambda, A) pairs, pattern subalgebras, minimal strongly connected digraphs",
               "matalg"};
  app.require_subcommand(1);
  Options o;

  auto add_output = [&](CLI::App* cmd) { cmd->add_option("-o,--output", o.output, "Output file (default stdout)"); };
  auto add_pair_input = [&](CLI::App* cmd) {
    cmd->add_option("input", o.input, "Matrix-pair JSON file, or - for stdin")->required();
    cmd->add_option("--tolerance", o.tolerance, "Support threshold for float entries")
        ->check(CLI::NonNegativeNumber);
    add_output(cmd);
  };

  auto* classify_cmd = app.add_subcommand("classify", "Classify a (Lambda, A) pair");
  add_pair_input(classify_cmd);
  classify_cmd->add_flag("--verify", o.verify, "Cross-check against the brute-force oracle");

  auto* subspaces_cmd = app.add_subcommand("subspaces", "List invariant coordinate subspaces");
  add_pair_input(subspaces_cmd);

  auto* closure_cmd = app.add_subcommand("closure", "Product closure of a pattern");
  closure_cmd->add_option("input", o.input, "Pattern JSON file, or - for stdin")->required();
  closure_cmd->add_flag("--with-diagonal", o.with_diagonal, "Adjoin all diagonal pairs first");
  add_output(closure_cmd);

  auto* subalgebras_cmd = app.add_subcommand("subalgebras", "List maximal pattern subalgebras of Mat(n)");
  subalgebras_cmd->add_option("-n,--n", o.n, "Dimension (2..12)")->required();
  subalgebras_cmd->add_flag("--recursion", o.recursion, "Also derive the list by lifting from n-1");
  add_output(subalgebras_cmd);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "Count minimal strongly connected digraphs");
  enumerate_cmd->add_option("-n,--n", o.n, "Number of vertices")->required();
  enumerate_cmd->add_flag("--unlabeled", o.unlabeled, "Count isomorphism classes");
  enumerate_cmd->add_flag("--stream", o.stream, "Emit every pattern as a JSON line");
  enumerate_cmd->add_option("--cap", o.cap, "Largest n accepted");
  add_output(enumerate_cmd);

  auto* oracle_cmd = app.add_subcommand("oracle-verify", "Run the brute-force oracle on a pair");
  add_pair_input(oracle_cmd);

  auto* tables_cmd = app.add_subcommand("tables", "Count table for n = 1..max-n");
  tables_cmd->add_option("--max-n", o.n, "Largest n")->required();
  tables_cmd->add_flag("--labeled", o.labeled, "Labeled counts");
  tables_cmd->add_flag("--unlabeled", o.unlabeled, "Unlabeled counts");
  tables_cmd->add_flag("--golden", o.golden, "Compare against the published values");
  tables_cmd->add_option("--cap", o.cap, "Largest n accepted");
  add_output(tables_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return kOk;
  } catch (CLI::ParseError const& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  try {
    if (classify_cmd->parsed()) return classify_command(o, in, out, err);
    if (subspaces_cmd->parsed()) return subspaces_command(o, in, out);
    if (closure_cmd->parsed()) return closure_command(o, in, out);
    if (subalgebras_cmd->parsed()) return subalgebras_command(o, out);
    if (enumerate_cmd->parsed()) return enumerate_command(o, out);
    if (oracle_cmd->parsed()) return oracle_verify_command(o, in, out);
    if (tables_cmd->parsed()) return tables_command(o, out, err);
  } catch (InvalidSpectrum const& e) {
    err << "error: invalid spectrum: " << e.what() << '\n';
    return kInvalidSpectrum;
  } catch (ParseError const& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (DimensionMismatch const& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (VerifyMismatch const& e) {
    err << "error: " << e.what() << '\n';
    return kVerifyMismatch;
  } catch (CapExceeded const& e) {
    err << "error: cap exceeded: " << e.what() << '\n';
    return kCapExceeded;
  } catch (IndexOutOfRange const& e) {
    err << "error: " << e.what() << '\n';
    return kCapExceeded;
  } catch (std::exception const& e) {
    err << "error: " << e.what() << '\n';
    return kInternalError;
  }
  return kInternalError;
}

}  // namespace matalg::cli
