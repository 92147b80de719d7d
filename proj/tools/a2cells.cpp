#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "a2cells/report.hpp"
#include "a2cells/verify.hpp"

using namespace a2cells;

namespace {

// A descriptor argument may also name a JSON file holding a custom system.
CoxeterSystem load_system(const std::string& descriptor) {
  if (std::filesystem::is_regular_file(descriptor)) {
    std::ifstream in(descriptor);
    std::stringstream ss;
    ss << in.rdbuf();
    return CoxeterSystem::from_descriptor(ss.str());
  }
  return CoxeterSystem::from_descriptor(descriptor);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open output file " + out_path);
  out << text;
}

int print_checks(const std::vector<CheckResult>& results, const std::string& out_path) {
  std::ostringstream text;
  std::string first_fail;
  for (const auto& r : results) {
    text << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
    if (!r.pass && !r.detail.empty()) text << "  [" << r.detail << "]";
    text << "\n";
    if (!r.pass && first_fail.empty()) first_fail = r.name;
  }
  if (first_fail.empty()) {
    text << "all " << results.size() << " checks passed\n";
  } else {
    text << "FAILED: first failing check: " << first_fail << "\n";
  }
  emit(text.str(), out_path);
  return first_fail.empty() ? 0 : 1;
}

size_t probe_group_size(const CoxeterSystem& sys, size_t bound) {
  KLOracle probe_unused_dummy [[maybe_unused]] = KLOracle(sys, bound);  // throws past the bound
  return probe_unused_dummy.size();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kazhdan-Lusztig cells of a-value 2 in a(2)-finite Coxeter systems"};
  app.require_subcommand(1);

  std::string format = "table";
  std::string out_path;
  bool slow_ok = false;
  size_t bound = 500;
  app.add_option("--format", format, "output format: table|json|dot|tikz")->capture_default_str();
  app.add_option("--out", out_path, "write output to a file instead of stdout");
  app.add_flag("--slow-ok", slow_ok, "allow slow oracle runs (more than 300 group elements)");
  app.add_option("--bound", bound, "oracle group size bound")->capture_default_str();

  std::string descriptor;
  std::string x_word, y_word, word_text;

  auto* cmd_stubs = app.add_subcommand("stubs", "list the left stubs of a-value 2");
  cmd_stubs->add_option("system", descriptor, "system descriptor")->required();
  auto* cmd_cells = app.add_subcommand("cells", "enumerate W_2 and its right cells");
  cmd_cells->add_option("system", descriptor)->required();
  auto* cmd_zero = app.add_subcommand("zero-cell", "intersection of a right cell with a left cell");
  cmd_zero->add_option("system", descriptor)->required();
  cmd_zero->add_option("--x", x_word, "left stub word (comma-joined labels)")->required();
  cmd_zero->add_option("--y", y_word, "left stub word labeling the left cell")->required();
  auto* cmd_sizes = app.add_subcommand("sizes", "enumerated vs closed-form cell sizes");
  cmd_sizes->add_option("system", descriptor)->required();
  auto* cmd_verify = app.add_subcommand("verify", "run the golden checks for one system");
  cmd_verify->add_option("system", descriptor)->required();
  auto* cmd_oracle = app.add_subcommand("oracle-verify", "compare with the Kazhdan-Lusztig oracle");
  cmd_oracle->add_option("system", descriptor)->required();
  auto* cmd_heap = app.add_subcommand("heap", "render the heap of a word");
  cmd_heap->add_option("system", descriptor)->required();
  cmd_heap->add_option("--word", word_text, "comma-joined generator labels")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_stubs) {
      W2Map map(load_system(descriptor));
      emit(format == "json" ? stubs_report_json(map) : stubs_report_table(map), out_path);
      return 0;
    }
    if (*cmd_cells) {
      W2Map map(load_system(descriptor));
      if (format == "json") {
        emit(cells_report_json(map), out_path);
      } else {
        emit(cells_report_table(map), out_path);
      }
      return 0;
    }
    if (*cmd_zero) {
      CoxeterSystem sys = load_system(descriptor);
      W2Map map(sys);
      int xi = map.stub_index(canonical_key(parse_element(sys, x_word)));
      int yi = map.stub_index(canonical_key(parse_element(sys, y_word)));
      if (xi < 0 || yi < 0) fail(Errc::unknown_stub_word, "--x and --y must be left stubs of the system");
      emit(format == "json" ? zero_cell_report_json(map, xi, yi) : zero_cell_report_table(map, xi, yi), out_path);
      return 0;
    }
    if (*cmd_sizes) {
      W2Map map(load_system(descriptor));
      emit(format == "json" ? sizes_report_json(map) : sizes_report_table(map), out_path);
      return 0;
    }
    if (*cmd_verify) {
      CoxeterSystem sys = load_system(descriptor);
      return print_checks(verify_system(sys), out_path);
    }
    if (*cmd_oracle) {
      CoxeterSystem sys = load_system(descriptor);
      size_t n = probe_group_size(sys, bound);
      if (n > 300 && !slow_ok)
        fail(Errc::group_too_large,
             "group has " + std::to_string(n) + " elements; pass --slow-ok to run the full pair scan");
      auto results = oracle_verify(sys, bound);
      if (format == "json") {
        KLOracle oracle(sys, bound);
        emit(oracle_report_json(oracle), out_path);
        return all_pass(results) ? 0 : 1;
      }
      std::cout << "group size " << n << "\n";
      return print_checks(results, out_path);
    }
    if (*cmd_heap) {
      CoxeterSystem sys = load_system(descriptor);
      Word w = parse_word(sys, word_text);
      GroupElement e = GroupElement::from_word(sys, w);
      if (length(e) != static_cast<int>(w.letters.size())) {
        std::cerr << "warning: word is not reduced\n";
      } else if (!is_fc_reduced_word(sys, w)) {
        std::cerr << "warning: word is not fully commutative\n";
      }
      Heap h(sys, w);
      emit(format == "tikz" ? heap_tikz(h) : heap_dot(h), out_path);
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case Errc::not_a2_finite:
        return 2;
      case Errc::unknown_stub_word:
      case Errc::bad_word:
        return 3;
      default:
        return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
