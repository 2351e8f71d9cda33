#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cgt/position.hpp"
#include "cgt/reductions.hpp"
#include "cgt/selftest.hpp"
#include "cgt/universality.hpp"
#include "cgt/value_text.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int cmd_eval(const std::string& file) {
  cgt::Position pos = cgt::parse_position(read_file(file));
  cgt::Game g = cgt::to_game(pos);
  std::cout << "outcome: " << cgt::to_char(g.outcome()) << "\n";
  std::cout << "value: " << cgt::render_value(g) << "\n";
  return 0;
}

const cgt::TTPosition& as_tt(const cgt::Position& pos) {
  if (const auto* tt = std::get_if<cgt::TTPosition>(&pos)) return *tt;
  throw std::runtime_error("this command requires a turning-tiles position");
}

int cmd_reduce(const std::string& to, const std::string& file) {
  const cgt::TTPosition tt = as_tt(cgt::parse_position(read_file(file)));
  if (to == "gol")
    std::cout << cgt::render_position(cgt::tt_to_lattice(tt));
  else
    std::cout << cgt::render_position(cgt::tt_to_door(tt));
  return 0;
}

int cmd_check_iso(const std::string& file_a, const std::string& file_b) {
  cgt::Game a = cgt::to_game(cgt::parse_position(read_file(file_a)));
  cgt::Game b = cgt::to_game(cgt::parse_position(read_file(file_b)));
  bool iso = cgt::tree_isomorphic(a, b);
  std::cout << "isomorphic: " << (iso ? "true" : "false") << "\n";
  return iso ? 0 : 1;
}

int cmd_certify(const std::string& file) {
  const cgt::TTPosition tt = as_tt(cgt::parse_position(read_file(file)));
  bool all = true;
  for (auto target : {cgt::ReductionTarget::GoL, cgt::ReductionTarget::BtD}) {
    auto cert = cgt::certify_reduction(tt, target);
    std::cout << cgt::render_certificate(cert);
    all = all && cert.isomorphic;
  }
  return all ? 0 : 1;
}

int cmd_delta_path(int n, bool up) {
  std::cout << cgt::render_position(up ? cgt::up_path(n) : cgt::down_path(n));
  return 0;
}

int cmd_realize(const std::string& value, int max_w, int max_h, int max_p) {
  cgt::Game target = cgt::parse_value(value);
  auto result = cgt::realize_search(target, max_w, max_h, max_p);
  std::cout << cgt::render_realization(result);
  return result.found ? 0 : 1;
}

int cmd_render(const std::string& file) {
  std::cout << cgt::render_diagram(cgt::parse_position(read_file(file)));
  return 0;
}

int cmd_selftest() {
  int total_passed = 0, total_failed = 0;
  for (const auto& suite : cgt::run_selftests()) {
    std::cout << suite.name << ": passed " << suite.passed << ", failed "
              << suite.failed << "\n";
    for (const std::string& f : suite.failures)
      std::cerr << "  FAIL " << suite.name << ": " << f << "\n";
    total_passed += suite.passed;
    total_failed += suite.failed;
  }
  std::cout << "total: passed " << total_passed << ", failed " << total_failed
            << "\n";
  return total_failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact engine for partizan games: Turning Tiles, Go on Lattice,"
               " Beyond the Door, and their delta variants"};
  app.require_subcommand(1);

  std::string file, file_b, to, value;
  int n = 0, max_w = 2, max_h = 2, max_p = 1;
  bool up_flag = false;

  auto* eval = app.add_subcommand("eval", "Evaluate a position file");
  eval->add_option("file", file, "position file")->required();

  auto* reduce = app.add_subcommand("reduce",
                                    "Map a turning-tiles position to gol/btd");
  reduce->add_option("--to", to, "target ruleset (gol|btd)")
      ->required()
      ->check(CLI::IsMember({"gol", "btd"}));
  reduce->add_option("file", file, "position file")->required();

  auto* iso = app.add_subcommand("check-iso",
                                 "Compare the game trees of two positions");
  iso->add_option("file_a", file, "first position file")->required();
  iso->add_option("file_b", file_b, "second position file")->required();

  auto* certify = app.add_subcommand(
      "certify", "Certify both reductions of a turning-tiles position");
  certify->add_option("file", file, "position file")->required();

  auto* dpath = app.add_subcommand("delta-path",
                                   "Generate a Lemma-1 staircase position");
  dpath->add_option("--n", n, "number of steps")->required()
      ->check(CLI::NonNegativeNumber);
  dpath->add_flag("--up", up_flag, "color-swapped (up) variant");

  auto* realize = app.add_subcommand(
      "realize", "Search for a delta-beyond-the-door position with a value");
  realize->add_option("--value", value, "target value expression")->required();
  realize->add_option("--max-width", max_w, "board width bound");
  realize->add_option("--max-height", max_h, "board height bound");
  realize->add_option("--max-pieces", max_p, "piece count bound");

  auto* render = app.add_subcommand("render", "Print a board diagram");
  render->add_option("file", file, "position file")->required();

  auto* selftest =
      app.add_subcommand("selftest", "Run all invariant suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (eval->parsed()) return cmd_eval(file);
    if (reduce->parsed()) return cmd_reduce(to, file);
    if (iso->parsed()) return cmd_check_iso(file, file_b);
    if (certify->parsed()) return cmd_certify(file);
    if (dpath->parsed()) return cmd_delta_path(n, up_flag);
    if (realize->parsed()) return cmd_realize(value, max_w, max_h, max_p);
    if (render->parsed()) return cmd_render(file);
    if (selftest->parsed()) return cmd_selftest();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
