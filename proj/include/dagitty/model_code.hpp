#pragma once

#include <array>
#include <cctype>
#include <charconv>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "dagitty/errors.hpp"
#include "dagitty/graph.hpp"

// Model code is the two-block text format for diagrams:
//
//   E E @-2.2,1.6        <- variable block: name, status code, optional layout
//   D O @1.4,1.6
//   Z 1
//                        <- first blank line ends the variable block
//   E D                  <- adjacency block: source followed by its targets
//   Z E D
//
// Names are percent-encoded so that they never contain whitespace.

namespace dagitty::model_code {

namespace detail {

constexpr bool is_safe(unsigned char c) noexcept {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' || c == '.' ||
         c == '-';
}

constexpr int hex_value(char c) noexcept {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

inline bool is_blank(std::string_view line) {
  for (char c : line)
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

inline std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::optional<double> parse_number(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value, std::chars_format::general);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(value)) return std::nullopt;
  return value;
}

inline std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // no "-0"
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

}  // namespace detail

/// Percent-encodes every byte outside [A-Za-z0-9_.-].
inline std::string encode_name(std::string_view name) {
  static constexpr char digits[] = "0123456789ABCDEF";
  std::string out;
  out.reserve(name.size());
  for (char ch : name) {
    const auto c = static_cast<unsigned char>(ch);
    if (detail::is_safe(c)) {
      out.push_back(ch);
    } else {
      out.push_back('%');
      out.push_back(digits[c >> 4]);
      out.push_back(digits[c & 0xF]);
    }
  }
  return out;
}

inline std::string decode_name(std::string_view encoded, std::optional<std::size_t> line = std::nullopt) {
  std::string out;
  out.reserve(encoded.size());
  for (std::size_t i = 0; i < encoded.size(); ++i) {
    if (encoded[i] != '%') {
      out.push_back(encoded[i]);
      continue;
    }
    if (i + 2 >= encoded.size())
      throw SyntaxError("truncated escape in '" + std::string(encoded) + "'", line);
    const int hi = detail::hex_value(encoded[i + 1]);
    const int lo = detail::hex_value(encoded[i + 2]);
    if (hi < 0 || lo < 0) throw SyntaxError("invalid escape in '" + std::string(encoded) + "'", line);
    out.push_back(static_cast<char>((hi << 4) | lo));
    i += 2;
  }
  return out;
}

/// Parses model code. Accepts \n and \r\n line endings, trailing whitespace,
/// and both bare and layout-augmented variable lines.
inline Dag parse(std::string_view text) {
  Dag::Builder builder;
  bool in_edges = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (detail::is_blank(line)) {
      in_edges = true;
      continue;
    }
    const auto tokens = detail::tokenize(line);

    if (!in_edges) {
      if (tokens.size() < 2 || tokens.size() > 3)
        throw SyntaxError("expected '<name> <status> [@x,y]'", line_no);
      auto status = status_from_code(tokens[1]);
      if (!status) throw SyntaxError("unknown status code '" + std::string(tokens[1]) + "'", line_no);
      std::optional<Point> layout;
      if (tokens.size() == 3) {
        auto coord = tokens[2];
        const auto comma = coord.find(',');
        if (coord.front() != '@' || comma == std::string_view::npos)
          throw SyntaxError("malformed coordinate '" + std::string(coord) + "'", line_no);
        auto x = detail::parse_number(coord.substr(1, comma - 1));
        auto y = detail::parse_number(coord.substr(comma + 1));
        if (!x || !y) throw SyntaxError("malformed coordinate '" + std::string(coord) + "'", line_no);
        layout = Point{*x, *y};
      }
      auto name = decode_name(tokens[0], line_no);
      if (name.empty()) throw SyntaxError("empty variable name", line_no);
      if (builder.contains(name)) throw NameCollision("variable '" + name + "' declared twice", line_no);
      builder.variable(std::move(name), *status, layout);
      continue;
    }

    const auto source = decode_name(tokens[0], line_no);
    if (!builder.contains(source)) throw UndeclaredVariable("undeclared variable '" + source + "'", line_no);
    for (std::size_t k = 1; k < tokens.size(); ++k) {
      const auto target = decode_name(tokens[k], line_no);
      if (!builder.contains(target)) throw UndeclaredVariable("undeclared variable '" + target + "'", line_no);
      try {
        builder.edge(source, target);
      } catch (const CycleError& e) {
        throw CycleError(e.what(), line_no);
      } catch (const SelfLoopError& e) {
        throw SelfLoopError(e.what(), line_no);
      }
    }
  }
  return std::move(builder).build();
}

inline std::string format_layout(const Point& p) {
  return "@" + detail::format_number(p.x) + "," + detail::format_number(p.y);
}

/// Canonical text: one line per variable in declaration order, a blank
/// line, then one line per source with outgoing arrows.
inline std::string serialize(const Dag& g) {
  std::string out;
  for (const auto& v : g.variables()) {
    out += encode_name(v.name);
    out += ' ';
    out += status_code(v.status);
    if (v.layout) {
      out += ' ';
      out += format_layout(*v.layout);
    }
    out += '\n';
  }
  out += '\n';
  for (std::size_t s = 0; s < g.size(); ++s) {
    const auto targets = g.children(s);
    if (targets.empty()) continue;
    out += encode_name(g.name(s));
    for (auto t : targets) {
      out += ' ';
      out += encode_name(g.name(t));
    }
    out += '\n';
  }
  return out;
}

}  // namespace dagitty::model_code
