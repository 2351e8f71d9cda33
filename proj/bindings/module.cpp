#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cgt/game.hpp"
#include "cgt/position.hpp"
#include "cgt/reductions.hpp"
#include "cgt/selftest.hpp"
#include "cgt/universality.hpp"
#include "cgt/value_text.hpp"

namespace py = pybind11;
using namespace cgt;

namespace {

std::string outcome_str(Outcome o) { return std::string(1, to_char(o)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact partizan game engine";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Game>(m, "Game")
      .def_static(
          "make",
          [](const std::vector<Game>& l, const std::vector<Game>& r) {
            return Game::make(l, r);
          },
          py::arg("left"), py::arg("right"))
      .def_property_readonly("left_options", &Game::left_options)
      .def_property_readonly("right_options", &Game::right_options)
      .def("outcome", [](Game g) { return outcome_str(g.outcome()); })
      .def("canonical", &Game::canonical)
      .def("birthday", &Game::birthday)
      .def("dicotic", &Game::dicotic)
      .def("infinitesimal", &Game::infinitesimal)
      .def("stops",
           [](Game g) {
             auto [l, r] = g.stops();
             return std::pair(l.str(), r.str());
           })
      .def("delta", &Game::delta)
      .def("up_bound", &Game::up_bound)
      .def("geq", &Game::geq)
      .def("leq", &Game::leq)
      .def("eq", &Game::eq)
      .def("confused", &Game::confused)
      .def(
          "__eq__", [](Game a, Game b) { return a == b; }, py::is_operator())
      .def("__hash__", [](Game g) { return static_cast<py::ssize_t>(g.id()); })
      .def("__neg__", [](Game g) { return -g; })
      .def("__add__", [](Game a, Game b) { return a + b; })
      .def("__sub__", [](Game a, Game b) { return a - b; })
      .def("__str__", [](Game g) { return render_value(g); })
      .def("__repr__",
           [](Game g) { return "Game(" + render_tree(g) + ")"; });

  m.def("zero", &zero_game);
  m.def("star", &star);
  m.def("up", static_cast<Game (*)()>(&up));
  m.def("down", static_cast<Game (*)()>(&down));
  m.def("integer", &integer_game);
  m.def("up_multiple", &up_multiple);
  m.def("up_star_multiple", &up_star_multiple);
  m.def("down_multiple", &down_multiple);
  m.def("down_star_multiple", &down_star_multiple);

  m.def("parse_value", [](const std::string& s) { return parse_value(s); });
  m.def("render_value", &render_value);
  m.def("render_tree", &render_tree);

  // positions travel as canonical file text
  m.def("position_to_game",
        [](const std::string& text) { return to_game(parse_position(text)); });
  m.def("render_diagram",
        [](const std::string& text) { return render_diagram(parse_position(text)); });
  m.def("normalize_position",
        [](const std::string& text) { return render_position(parse_position(text)); });

  m.def("reduce_position", [](const std::string& text, const std::string& to) {
    Position pos = parse_position(text);
    const auto& p = std::get<TTPosition>(pos);
    if (to == "gol") return render_position(tt_to_lattice(p));
    if (to == "btd") return render_position(tt_to_door(p));
    throw std::invalid_argument("target must be 'gol' or 'btd'");
  });
  m.def("certify", [](const std::string& text, const std::string& to) {
    Position pos = parse_position(text);
    const auto& p = std::get<TTPosition>(pos);
    auto cert = certify_reduction(
        p, to == "btd" ? ReductionTarget::BtD : ReductionTarget::GoL);
    return py::make_tuple(cert.isomorphic, render_certificate(cert));
  });
  m.def("tree_isomorphic", [](const std::string& a, const std::string& b) {
    return tree_isomorphic(to_game(parse_position(a)),
                           to_game(parse_position(b)));
  });

  m.def("down_path", [](int n) { return render_position(down_path(n)); });
  m.def("up_path", [](int n) { return render_position(up_path(n)); });
  m.def("verify_value", [](const std::string& text, Game g) {
    return verify_value(std::get<DoorPosition>(parse_position(text)), g);
  });
  m.def("realize", [](Game target, int max_width, int max_height,
                      int max_pieces) {
    auto r = realize_search(target, max_width, max_height, max_pieces);
    return py::make_tuple(r.found,
                          r.position ? render_position(*r.position)
                                     : std::string(),
                          r.rooms_used, r.search_bound);
  });

  m.def("selftest", []() {
    py::list out;
    for (const auto& s : run_selftests())
      out.append(py::make_tuple(s.name, s.passed, s.failed));
    return out;
  });
}
