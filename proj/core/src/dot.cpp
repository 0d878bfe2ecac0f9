#include "biframe/dot.hpp"

#include <map>
#include <sstream>

namespace biframe {

std::string unicode_label(const std::string& ascii) {
  std::string out;
  for (std::size_t i = 0; i < ascii.size();) {
    if (ascii.compare(i, 2, "c(") == 0) {
      out += "\xF0\x9D\x94\xA0(";  // fraktur c
      i += 2;
    } else if (ascii.compare(i, 2, "o(") == 0) {
      out += "\xF0\x9D\x94\xAC(";  // fraktur o
      i += 2;
    } else if (ascii[i] == '+') {
      out += "\xE2\x8A\x95";  // circled plus
      i += 1;
    } else if (ascii.compare(i, 3, " v ") == 0) {
      out += " \xE2\x88\xA8 ";  // vee
      i += 3;
    } else if (ascii[i] == '^') {
      out += "\xE2\x88\xA7";  // wedge
      i += 1;
    } else {
      out += ascii[i];
      i += 1;
    }
  }
  return out;
}

std::string to_dot(const FinPoset& p, const std::string& graph_name, bool unicode) {
  std::ostringstream os;
  os << "digraph \"" << graph_name << "\" {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=plaintext];\n";
  for (int x = 0; x < p.size(); ++x) {
    const std::string l = unicode ? unicode_label(p.label(x)) : p.label(x);
    os << "  n" << x << " [label=\"" << l << "\"];\n";
  }
  std::map<int, std::vector<int>> by_height;
  for (int x = 0; x < p.size(); ++x) by_height[p.height(x)].push_back(x);
  for (const auto& [h, elems] : by_height) {
    os << "  { rank=same;";
    for (int x : elems) os << " n" << x << ";";
    os << " }\n";
  }
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y)
      if (p.covers(x, y)) os << "  n" << x << " -> n" << y << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace biframe
