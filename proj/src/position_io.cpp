#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cgt/position.hpp"

namespace cgt {

namespace {

char tile_char(Tile t) {
  switch (t) {
    case Tile::Blue: return 'L';
    case Tile::Red: return 'R';
    case Tile::Green: return 'G';
    case Tile::Black: return 'X';
    case Tile::None: return '.';
  }
  return '?';
}

char edge_char(EdgeColor e) {
  switch (e) {
    case EdgeColor::BlueSolid: return 'B';
    case EdgeColor::RedSolid: return 'R';
    case EdgeColor::Dotted: return 'D';
    case EdgeColor::Absent: return '.';
  }
  return '?';
}

char side_char(DoorSide d) {
  switch (d) {
    case DoorSide::Blue: return 'B';
    case DoorSide::Red: return 'R';
    case DoorSide::Black: return 'K';
  }
  return '?';
}

const char* variant_tag(Variant v) {
  return v == Variant::Standard ? "standard" : "delta";
}

void render_header(std::ostringstream& out, const char* ruleset, Variant v,
                   int w, int h) {
  out << "ruleset: " << ruleset << "\n";
  out << "variant: " << variant_tag(v) << "\n";
  out << "width: " << w << "\n";
  out << "height: " << h << "\n";
}

void render_pieces(std::ostringstream& out, const std::vector<Coord>& pieces) {
  out << "pieces:\n";
  for (const Coord& p : pieces) out << p.row << " " << p.col << "\n";
}

template <typename P>
void render_dead(std::ostringstream& out, const P& p, const char* header) {
  out << header << ":\n";
  for (int r = 0; r < p.height; ++r)
    for (int c = 0; c < p.width; ++c)
      if (!p.is_alive(r, c)) out << r << " " << c << "\n";
}

}  // namespace

std::string render_position(const TTPosition& p) {
  std::ostringstream out;
  render_header(out, p.allow_green ? "turning-tiles-green" : "turning-tiles",
                p.variant, p.width, p.height);
  out << "grid:\n";
  for (int r = 0; r < p.height; ++r) {
    for (int c = 0; c < p.width; ++c) out << tile_char(p.tile(r, c));
    out << "\n";
  }
  render_pieces(out, p.pieces);
  return out.str();
}

std::string render_position(const LatticePosition& p) {
  std::ostringstream out;
  render_header(out, "go-on-lattice", p.variant, p.width, p.height);
  out << "hedges:\n";
  for (int r = 0; r < p.height; ++r) {
    for (int c = 0; c < p.width - 1; ++c) out << edge_char(p.hedge(r, c));
    out << "\n";
  }
  out << "vedges:\n";
  for (int r = 0; r < p.height - 1; ++r) {
    for (int c = 0; c < p.width; ++c) out << edge_char(p.vedge(r, c));
    out << "\n";
  }
  render_dead(out, p, "dead");
  render_pieces(out, p.pieces);
  return out.str();
}

std::string render_position(const DoorPosition& p) {
  std::ostringstream out;
  render_header(out, "beyond-the-door", p.variant, p.width, p.height);
  out << "hdoors:\n";
  for (int r = 0; r < p.height; ++r) {
    for (int c = 0; c < p.width - 1; ++c) {
      if (c > 0) out << " ";
      out << side_char(p.hdoor(r, c).first) << side_char(p.hdoor(r, c).second);
    }
    out << "\n";
  }
  out << "vdoors:\n";
  for (int r = 0; r < p.height - 1; ++r) {
    for (int c = 0; c < p.width; ++c) {
      if (c > 0) out << " ";
      out << side_char(p.vdoor(r, c).first) << side_char(p.vdoor(r, c).second);
    }
    out << "\n";
  }
  render_dead(out, p, "blocked");
  render_pieces(out, p.pieces);
  return out.str();
}

std::string render_position(const Position& p) {
  return std::visit([](const auto& q) { return render_position(q); }, p);
}

namespace {

class PositionParser {
 public:
  explicit PositionParser(std::string_view text) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t nl = text.find('\n', start);
      if (nl == std::string_view::npos) {
        if (start < text.size()) lines_.emplace_back(text.substr(start));
        break;
      }
      lines_.emplace_back(text.substr(start, nl - start));
      start = nl + 1;
    }
    for (std::string& l : lines_)
      if (!l.empty() && l.back() == '\r') l.pop_back();
  }

  Position parse() {
    std::string ruleset = require_kv("ruleset");
    std::string variant_s = require_kv("variant");
    Variant variant;
    if (variant_s == "standard")
      variant = Variant::Standard;
    else if (variant_s == "delta")
      variant = Variant::Delta;
    else
      fail(cur_line_, 10, "unknown variant '" + variant_s + "'");
    int w = require_int("width");
    int h = require_int("height");
    if (w < 1 || h < 1) fail(cur_line_, 8, "dimensions must be positive");
    Position result;
    if (ruleset == "turning-tiles" || ruleset == "turning-tiles-green") {
      result = parse_tt(ruleset == "turning-tiles-green", variant, w, h);
    } else if (ruleset == "go-on-lattice") {
      result = parse_gol(variant, w, h);
    } else if (ruleset == "beyond-the-door") {
      result = parse_btd(variant, w, h);
    } else {
      fail(1, 10, "unknown ruleset '" + ruleset + "'");
    }
    if (next_ < lines_.size())
      fail(static_cast<int>(next_) + 1, 1, "unexpected trailing content");
    try {
      std::visit([](const auto& q) { validate(q); }, result);
    } catch (const std::invalid_argument& e) {
      fail(static_cast<int>(next_), 1, e.what());
    }
    return result;
  }

 private:
  TTPosition parse_tt(bool green, Variant v, int w, int h) {
    TTPosition p;
    p.width = w;
    p.height = h;
    p.allow_green = green;
    p.variant = v;
    require_section("grid");
    for (int r = 0; r < h; ++r) {
      std::string row = require_row(w);
      for (int c = 0; c < w; ++c) {
        switch (row[c]) {
          case 'L': p.tiles.push_back(Tile::Blue); break;
          case 'R': p.tiles.push_back(Tile::Red); break;
          case 'G': p.tiles.push_back(Tile::Green); break;
          case 'X': p.tiles.push_back(Tile::Black); break;
          case '.': p.tiles.push_back(Tile::None); break;
          default: fail(cur_line_, c + 1, "unknown tile character");
        }
      }
    }
    p.pieces = parse_coord_list("pieces");
    return p;
  }

  LatticePosition parse_gol(Variant v, int w, int h) {
    LatticePosition p;
    p.width = w;
    p.height = h;
    p.variant = v;
    auto edge_of = [this](char ch, int col) {
      switch (ch) {
        case 'B': return EdgeColor::BlueSolid;
        case 'R': return EdgeColor::RedSolid;
        case 'D': return EdgeColor::Dotted;
        case '.': return EdgeColor::Absent;
        default: fail(cur_line_, col + 1, "unknown edge character");
      }
    };
    require_section("hedges");
    for (int r = 0; r < h; ++r) {
      std::string row = require_row(w - 1);
      for (int c = 0; c < w - 1; ++c) p.hedges.push_back(edge_of(row[c], c));
    }
    require_section("vedges");
    for (int r = 0; r < h - 1; ++r) {
      std::string row = require_row(w);
      for (int c = 0; c < w; ++c) p.vedges.push_back(edge_of(row[c], c));
    }
    p.alive.assign(w * h, 1);
    for (const Coord& d : parse_coord_list("dead")) {
      if (!(d.row >= 0 && d.row < h && d.col >= 0 && d.col < w))
        fail(cur_line_, 1, "dead node off board");
      p.alive[d.row * w + d.col] = 0;
    }
    p.pieces = parse_coord_list("pieces");
    return p;
  }

  DoorPosition parse_btd(Variant v, int w, int h) {
    DoorPosition p;
    p.width = w;
    p.height = h;
    p.variant = v;
    auto side_of = [this](char ch, int col) {
      switch (ch) {
        case 'B': return DoorSide::Blue;
        case 'R': return DoorSide::Red;
        case 'K': return DoorSide::Black;
        default: fail(cur_line_, col + 1, "unknown door side character");
      }
    };
    auto parse_rows = [&](int rows, int groups,
                          std::vector<std::pair<DoorSide, DoorSide>>& out) {
      for (int r = 0; r < rows; ++r) {
        std::string line = next_line();
        std::istringstream in(line);
        std::string group;
        int g = 0;
        while (in >> group) {
          if (g >= groups) fail(cur_line_, 1, "too many door groups");
          if (group.size() != 2)
            fail(cur_line_, 1, "door group must be two characters");
          out.emplace_back(side_of(group[0], 0), side_of(group[1], 1));
          ++g;
        }
        if (g != groups) fail(cur_line_, 1, "wrong number of door groups");
      }
    };
    require_section("hdoors");
    parse_rows(h, w - 1, p.hdoors);
    require_section("vdoors");
    parse_rows(h - 1, w, p.vdoors);
    p.alive.assign(w * h, 1);
    for (const Coord& d : parse_coord_list("blocked")) {
      if (!(d.row >= 0 && d.row < h && d.col >= 0 && d.col < w))
        fail(cur_line_, 1, "blocked room off board");
      p.alive[d.row * w + d.col] = 0;
    }
    p.pieces = parse_coord_list("pieces");
    return p;
  }

  std::vector<Coord> parse_coord_list(const std::string& name) {
    require_section(name);
    std::vector<Coord> res;
    while (next_ < lines_.size()) {
      const std::string& line = lines_[next_];
      if (line.empty() || !(std::isdigit(static_cast<unsigned char>(line[0])) ||
                            line[0] == '-'))
        break;
      std::istringstream in(line);
      Coord c;
      if (!(in >> c.row >> c.col))
        fail(static_cast<int>(next_) + 1, 1, "expected 'row col'");
      std::string extra;
      if (in >> extra)
        fail(static_cast<int>(next_) + 1, 1, "trailing content after 'row col'");
      res.push_back(c);
      ++next_;
      cur_line_ = static_cast<int>(next_);
    }
    return res;
  }

  std::string next_line() {
    if (next_ >= lines_.size())
      fail(static_cast<int>(lines_.size()) + 1, 1, "unexpected end of input");
    cur_line_ = static_cast<int>(next_) + 1;
    return lines_[next_++];
  }

  std::string require_row(int len) {
    std::string line = next_line();
    if (static_cast<int>(line.size()) != len)
      fail(cur_line_, static_cast<int>(line.size()) + 1,
           "expected a row of " + std::to_string(len) + " characters");
    return line;
  }

  void require_section(const std::string& name) {
    std::string line = next_line();
    if (line != name + ":")
      fail(cur_line_, 1, "expected section '" + name + ":'");
  }

  std::string require_kv(const std::string& key) {
    std::string line = next_line();
    std::string prefix = key + ": ";
    if (line.rfind(prefix, 0) != 0)
      fail(cur_line_, 1, "expected '" + key + ": ...'");
    return line.substr(prefix.size());
  }

  int require_int(const std::string& key) {
    std::string v = require_kv(key);
    try {
      std::size_t used = 0;
      int n = std::stoi(v, &used);
      if (used != v.size()) throw std::invalid_argument(v);
      return n;
    } catch (const std::exception&) {
      fail(cur_line_, static_cast<int>(key.size()) + 3,
           "expected an integer for '" + key + "'");
    }
  }

  [[noreturn]] void fail(int line, int col, const std::string& msg) {
    throw ParseError(line, col, msg);
  }

  std::vector<std::string> lines_;
  std::size_t next_ = 0;
  int cur_line_ = 1;
};

}  // namespace

Position parse_position(std::string_view text) {
  return PositionParser(text).parse();
}

namespace {

std::string diagram(const TTPosition& p) {
  std::ostringstream out;
  for (int r = 0; r < p.height; ++r) {
    for (int c = 0; c < p.width; ++c) {
      if (c > 0) out << " ";
      out << tile_char(p.tile(r, c));
      bool piece = std::binary_search(p.pieces.begin(), p.pieces.end(),
                                      Coord{r, c});
      out << (piece ? '*' : ' ');
    }
    out << "\n";
  }
  return out.str();
}

std::string diagram(const LatticePosition& p) {
  std::ostringstream out;
  auto node = [&](int r, int c) {
    bool piece =
        std::binary_search(p.pieces.begin(), p.pieces.end(), Coord{r, c});
    if (piece) return '*';
    return p.is_alive(r, c) ? 'o' : 'x';
  };
  auto hch = [&](EdgeColor e) {
    switch (e) {
      case EdgeColor::BlueSolid: return 'B';
      case EdgeColor::RedSolid: return 'R';
      case EdgeColor::Dotted: return ':';
      case EdgeColor::Absent: return ' ';
    }
    return '?';
  };
  for (int r = 0; r < p.height; ++r) {
    for (int c = 0; c < p.width; ++c) {
      out << node(r, c);
      if (c < p.width - 1) out << hch(p.hedge(r, c));
    }
    out << "\n";
    if (r < p.height - 1) {
      for (int c = 0; c < p.width; ++c) {
        out << hch(p.vedge(r, c));
        if (c < p.width - 1) out << ' ';
      }
      out << "\n";
    }
  }
  return out.str();
}

std::string diagram(const DoorPosition& p) {
  std::ostringstream out;
  auto room = [&](int r, int c) {
    bool piece =
        std::binary_search(p.pieces.begin(), p.pieces.end(), Coord{r, c});
    if (piece) return '*';
    return p.is_alive(r, c) ? '.' : '#';
  };
  for (int r = 0; r < p.height; ++r) {
    for (int c = 0; c < p.width; ++c) {
      out << room(r, c);
      if (c < p.width - 1)
        out << side_char(p.hdoor(r, c).first)
            << side_char(p.hdoor(r, c).second);
    }
    out << "\n";
    if (r < p.height - 1) {
      for (int c = 0; c < p.width; ++c) {
        out << side_char(p.vdoor(r, c).first)
            << side_char(p.vdoor(r, c).second);
        if (c < p.width - 1) out << ' ';
      }
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace

std::string render_diagram(const Position& p) {
  return std::visit([](const auto& q) { return diagram(q); }, p);
}

}  // namespace cgt
