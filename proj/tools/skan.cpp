// Command-line front door: validate / check-kan / synthesize / verify plus
// the corpus generators. Single vs. multi engines are picked from the input
// file header. Reports are line-oriented (VIOLATION / NOFILL prefixes) and
// byte-stable across runs; exit codes: 0 clean, 1 violations or missing
// filler, 2 usage or parse errors.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <memory>
#include <ostream>

#include "skan/construct.hpp"
#include "skan/core.hpp"
#include "skan/corpus.hpp"
#include "skan/io.hpp"
#include "skan/kan.hpp"
#include "skan/multi.hpp"

namespace {

// report sink: -o FILE or stdout
struct Sink {
  std::ofstream file;
  std::ostream* out = &std::cout;

  explicit Sink(const std::string& path) {
    if (path.empty()) return;
    file.open(path);
    if (!file) throw skan::StructuralError("cannot write '" + path + "'");
    out = &file;
  }
  std::ostream& stream() { return *out; }
};

void print_report(const skan::VerificationReport& report) {
  for (const auto& violation : report.violations) std::cout << violation.line() << "\n";
  for (const auto& [tag, count] : report.checked)
    std::cout << "checked " << tag << " " << count << "\n";
  if (report.ok())
    std::cout << "ok\n";
  else
    std::cout << "violations " << report.violations.size() << "\n";
}

int run_validate(const std::string& input) {
  const skan::AnyComplex complex = skan::load_complex_file(input);
  const skan::ValidationReport report = std::holds_alternative<skan::SemiSimplicialSet>(complex)
                                            ? validate(std::get<skan::SemiSimplicialSet>(complex))
                                            : validate_multi(std::get<skan::MultiSemiSimplicialSet>(complex));
  for (const auto& entry : report.entries) std::cout << entry.line() << "\n";
  if (!report.ok()) return 1;
  std::cout << "ok\n";
  return 0;
}

int run_check_kan(const std::string& input, int depth) {
  const skan::AnyComplex complex = skan::load_complex_file(input);
  if (std::holds_alternative<skan::SemiSimplicialSet>(complex)) {
    const skan::KanCheckReport report = check_kan(std::get<skan::SemiSimplicialSet>(complex), depth);
    for (const auto& horn : report.unfillable) std::cout << "NOFILL " << horn.str() << "\n";
    if (!report.kan()) return 1;
    std::cout << "ok " << report.compatible_count << "\n";
    return 0;
  }
  const skan::MultiKanCheckReport report =
      check_multi_kan(std::get<skan::MultiSemiSimplicialSet>(complex), depth);
  for (const auto& horn : report.unfillable) std::cout << "NOFILL " << horn.str() << "\n";
  if (!report.kan()) return 1;
  std::cout << "ok " << report.compatible_count << "\n";
  return 0;
}

int run_synthesize(const std::string& input, int horizon, bool emit_t, bool debug_checks,
                   const std::string& output) {
  const skan::AnyComplex complex = skan::load_complex_file(input);
  const skan::SynthesisOptions options{debug_checks};
  const int truncation = std::holds_alternative<skan::SemiSimplicialSet>(complex)
                             ? std::get<skan::SemiSimplicialSet>(complex).truncation_degree()
                             : std::get<skan::MultiSemiSimplicialSet>(complex).truncation_total();
  if (horizon < 0 || horizon + 2 > truncation) {
    std::cerr << "error: horizon " << horizon << " needs truncation >= " << horizon + 2
              << ", input has " << truncation << "\n";
    return 2;
  }
  if (std::holds_alternative<skan::SemiSimplicialSet>(complex)) {
    const auto& base = std::get<skan::SemiSimplicialSet>(complex);
    try {
      const skan::SynthesisResult result = synthesize(base, horizon, options);
      Sink sink(output);
      save_tables(sink.stream(), result.state.s_table, result.state.t_table, emit_t);
      return 0;
    } catch (const skan::NoFiller& e) {
      std::cout << "NOFILL " << (e.stage().empty() ? "" : e.stage() + " ") << e.horn().str() << "\n";
      return 1;
    }
  }
  const auto& base = std::get<skan::MultiSemiSimplicialSet>(complex);
  try {
    const skan::MultiSynthesisResult result = synthesize_multi(base, horizon, options);
    Sink sink(output);
    save_tables(sink.stream(), result.state.s_table, result.state.t_table, emit_t);
    return 0;
  } catch (const skan::MultiNoFiller& e) {
    std::cout << "NOFILL " << (e.stage().empty() ? "" : e.stage() + " ") << e.horn().str() << "\n";
    return 1;
  }
}

int run_verify(const std::string& input, const std::string& tables_path) {
  const skan::AnyComplex complex = skan::load_complex_file(input);
  if (std::holds_alternative<skan::SemiSimplicialSet>(complex)) {
    const skan::DegeneracyTables tables = skan::load_tables_file(tables_path);
    const skan::VerificationReport report =
        verify_identities(std::get<skan::SemiSimplicialSet>(complex), tables.s, tables.t);
    print_report(report);
    return report.ok() ? 0 : 1;
  }
  const skan::MultiDegeneracyTables tables = skan::load_multi_tables_file(tables_path);
  const skan::VerificationReport report =
      verify_multi(std::get<skan::MultiSemiSimplicialSet>(complex), tables.s, tables.t);
  print_report(report);
  return report.ok() ? 0 : 1;
}

int run_gen_nerve(const std::string& group_path, int truncation, const std::string& output) {
  const skan::FiniteGroupTable group = skan::FiniteGroupTable::load_file(group_path);
  const skan::NerveResult result = nerve(group, truncation);
  Sink sink(output);
  save_complex(sink.stream(), result.complex);
  return 0;
}

int run_gen_product(const std::string& a_path, const std::string& b_path, int max_total,
                    const std::string& output) {
  const skan::AnyComplex a = skan::load_complex_file(a_path);
  const skan::AnyComplex b = skan::load_complex_file(b_path);
  if (!std::holds_alternative<skan::SemiSimplicialSet>(a) ||
      !std::holds_alternative<skan::SemiSimplicialSet>(b))
    throw skan::StructuralError("gen-product takes two semisimplicial inputs");
  const skan::ExternalProduct product = external_product(
      std::get<skan::SemiSimplicialSet>(a), std::get<skan::SemiSimplicialSet>(b), max_total);
  Sink sink(output);
  save_complex(sink.stream(), product.complex);
  return 0;
}

int run_free(const std::string& input, int truncation, const std::string& output,
             const std::string& tables_path) {
  const skan::AnyComplex complex = skan::load_complex_file(input);
  if (!std::holds_alternative<skan::SemiSimplicialSet>(complex))
    throw skan::StructuralError("free takes a semisimplicial input");
  const skan::FreeSimplicial result =
      free_simplicial(std::get<skan::SemiSimplicialSet>(complex), truncation);
  Sink sink(output);
  save_complex(sink.stream(), result.simplicial.base);
  if (!tables_path.empty()) {
    Sink tables(tables_path);
    save_tables(tables.stream(), result.simplicial.degeneracies, {}, false);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"degeneracy synthesis on Kan semisimplicial sets"};
  app.require_subcommand(1);

  std::string input, tables_path, output, group_path, a_path, b_path;
  int depth = 1, horizon = 0, truncation = 0, max_total = -1;
  bool emit_t = false, debug_checks = false;

  CLI::App* validate_cmd = app.add_subcommand("validate", "check the face identities of a complex");
  validate_cmd->add_option("input", input)->required();

  CLI::App* check_cmd = app.add_subcommand("check-kan", "enumerate horns and test fillability");
  check_cmd->add_option("input", input)->required();
  check_cmd->add_option("--depth", depth, "largest target degree to enumerate")->required();

  CLI::App* synth_cmd = app.add_subcommand("synthesize", "construct degeneracy tables");
  synth_cmd->add_option("input", input)->required();
  synth_cmd->add_option("--horizon", horizon, "largest degree to equip (needs truncation >= horizon+2)")
      ->required();
  synth_cmd->add_flag("--emit-t", emit_t, "also emit the auxiliary t table");
  synth_cmd->add_flag("--debug-checks", debug_checks, "re-validate horn systems while building");
  synth_cmd->add_option("-o,--output", output, "write tables here instead of stdout");

  CLI::App* verify_cmd = app.add_subcommand("verify", "check all simplicial identities on tables");
  verify_cmd->add_option("input", input)->required();
  verify_cmd->add_option("tables", tables_path)->required();

  CLI::App* nerve_cmd = app.add_subcommand("gen-nerve", "emit the nerve of a finite group");
  nerve_cmd->add_option("--group", group_path, "multiplication table file")->required();
  nerve_cmd->add_option("--truncation", truncation)->required();
  nerve_cmd->add_option("-o,--output", output);

  CLI::App* product_cmd = app.add_subcommand("gen-product", "emit the external product of two complexes");
  product_cmd->add_option("a", a_path)->required();
  product_cmd->add_option("b", b_path)->required();
  product_cmd->add_option("--max-total", max_total, "cap the total degree");
  product_cmd->add_option("-o,--output", output);

  CLI::App* free_cmd = app.add_subcommand("free", "emit the free simplicial set on a complex");
  free_cmd->add_option("input", input)->required();
  free_cmd->add_option("--truncation", truncation)->required();
  free_cmd->add_option("-o,--output", output);
  free_cmd->add_option("--tables", tables_path, "also write the degeneracy table here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*validate_cmd) return run_validate(input);
    if (*check_cmd) return run_check_kan(input, depth);
    if (*synth_cmd) return run_synthesize(input, horizon, emit_t, debug_checks, output);
    if (*verify_cmd) return run_verify(input, tables_path);
    if (*nerve_cmd) return run_gen_nerve(group_path, truncation, output);
    if (*product_cmd) return run_gen_product(a_path, b_path, max_total, output);
    if (*free_cmd) return run_free(input, truncation, output, tables_path);
  } catch (const skan::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const skan::InternalCheckError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
