#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "dagitty/graph.hpp"
#include "dagitty/model_code.hpp"
#include "dagitty/transforms.hpp"

namespace dagitty::render {

enum class NodeStyle { Classic, SemLike };

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

inline std::string to_dot(const Dag& g) {
  std::ostringstream out;
  out << "digraph dag {\n";
  for (const auto& v : g.variables()) {
    out << "  " << dot_quote(v.name) << " [status=" << status_name(v.status);
    if (v.layout) out << ", pos=\"" << model_code::detail::format_number(v.layout->x) << ","
                      << model_code::detail::format_number(v.layout->y) << "!\"";
    out << "];\n";
  }
  for (const auto& e : g.edges()) out << "  " << dot_quote(e.source) << " -> " << dot_quote(e.target) << ";\n";
  out << "}\n";
  return out.str();
}

inline std::string to_dot(const UndirectedGraph& u, const std::string& name = "derived") {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (const auto& v : u.vertices) out << "  " << dot_quote(v) << ";\n";
  for (const auto& [a, b] : u.lines) out << "  " << dot_quote(a) << " -- " << dot_quote(b) << ";\n";
  out << "}\n";
  return out.str();
}

/// Stored coordinates where present; otherwise a layered placement with the
/// rank (longest path from a source) as row and the position within the
/// rank as column.
inline std::vector<Point> resolve_layout(const Dag& g) {
  std::vector<std::size_t> rank(g.size(), 0);
  for (auto v : g.topological_order())
    for (auto c : g.children(v)) rank[c] = std::max(rank[c], rank[v] + 1);
  std::map<std::size_t, std::size_t> filled;
  std::vector<Point> out(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (g.variable(v).layout) {
      out[v] = *g.variable(v).layout;
    } else {
      const auto column = filled[rank[v]]++;
      out[v] = {static_cast<double>(column), static_cast<double>(rank[v])};
    }
  }
  return out;
}

namespace detail {

struct Palette {
  const char* fill;
  const char* stroke;
};

inline Palette palette(VariableStatus s) {
  switch (s) {
    case VariableStatus::Exposure: return {"#bed403", "#000000"};
    case VariableStatus::Outcome: return {"#00a2e0", "#000000"};
    case VariableStatus::Adjusted: return {"#ffffff", "#000000"};
    case VariableStatus::Unobserved: return {"#cccccc", "#666666"};
    case VariableStatus::Other: return {"#aaaaaa", "#000000"};
  }
  return {"#aaaaaa", "#000000"};
}

inline std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace detail

inline std::string to_svg(const Dag& g, NodeStyle style = NodeStyle::Classic) {
  constexpr double unit = 100.0;
  constexpr double margin = 60.0;
  const auto pos = resolve_layout(g);
  double min_x = 0, min_y = 0, max_x = 0, max_y = 0;
  for (std::size_t i = 0; i < pos.size(); ++i) {
    if (i == 0 || pos[i].x < min_x) min_x = pos[i].x;
    if (i == 0 || pos[i].y < min_y) min_y = pos[i].y;
    if (i == 0 || pos[i].x > max_x) max_x = pos[i].x;
    if (i == 0 || pos[i].y > max_y) max_y = pos[i].y;
  }
  auto px = [&](const Point& p) { return Point{margin + (p.x - min_x) * unit, margin + (p.y - min_y) * unit}; };
  const double width = 2 * margin + (max_x - min_x) * unit;
  const double height = 2 * margin + (max_y - min_y) * unit;
  const double radius = style == NodeStyle::Classic ? 8.0 : 24.0;

  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(1);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  out << "  <defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"8\" "
         "markerHeight=\"8\" orient=\"auto\"><path d=\"M 0 0 L 10 5 L 0 10 z\"/></marker></defs>\n";
  for (const auto& e : g.edges()) {
    const auto a = px(pos[g.index_of(e.source)]);
    const auto b = px(pos[g.index_of(e.target)]);
    const double dx = b.x - a.x, dy = b.y - a.y;
    const double len = std::hypot(dx, dy);
    if (len <= 2 * radius) continue;
    const double ux = dx / len, uy = dy / len;
    out << "  <line x1=\"" << a.x + ux * radius << "\" y1=\"" << a.y + uy * radius << "\" x2=\""
        << b.x - ux * radius << "\" y2=\"" << b.y - uy * radius
        << "\" stroke=\"#000000\" stroke-width=\"1.5\" marker-end=\"url(#arrow)\"/>\n";
  }
  for (std::size_t v = 0; v < g.size(); ++v) {
    const auto p = px(pos[v]);
    const auto colors = detail::palette(g.variable(v).status);
    const auto label = detail::xml_escape(g.name(v));
    const int stroke = g.variable(v).status == VariableStatus::Adjusted ? 3 : 1;
    if (style == NodeStyle::Classic) {
      out << "  <circle cx=\"" << p.x << "\" cy=\"" << p.y << "\" r=\"" << radius << "\" fill=\"" << colors.fill
          << "\" stroke=\"" << colors.stroke << "\" stroke-width=\"" << stroke << "\"/>\n";
      out << "  <text x=\"" << p.x + radius + 4 << "\" y=\"" << p.y - radius
          << "\" font-family=\"sans-serif\" font-size=\"14\">" << label << "</text>\n";
    } else {
      out << "  <ellipse cx=\"" << p.x << "\" cy=\"" << p.y << "\" rx=\"" << radius * 1.6 << "\" ry=\"" << radius
          << "\" fill=\"" << colors.fill << "\" stroke=\"" << colors.stroke << "\" stroke-width=\"" << stroke
          << "\"/>\n";
      out << "  <text x=\"" << p.x << "\" y=\"" << p.y + 5
          << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" << label << "</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace dagitty::render
