#pragma once

// Minimal TOML-subset reader covering the flat experiment manifests this
// project uses: bare keys, [tables], strings, integers, floats, booleans and
// single-line arrays. Not a general TOML implementation.

#include <cctype>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace gpswarm::toml {

struct ParseError : std::runtime_error {
  ParseError(int line, const std::string& msg)
      : std::runtime_error("toml line " + std::to_string(line) + ": " + msg) {}
};

struct Value {
  std::variant<std::string, std::int64_t, double, bool, std::vector<Value>> data;

  bool is_string() const { return std::holds_alternative<std::string>(data); }
  bool is_int() const { return std::holds_alternative<std::int64_t>(data); }
  bool is_float() const { return std::holds_alternative<double>(data); }
  bool is_bool() const { return std::holds_alternative<bool>(data); }
  bool is_array() const { return std::holds_alternative<std::vector<Value>>(data); }

  const std::string& as_string() const { return std::get<std::string>(data); }
  std::int64_t as_int() const { return std::get<std::int64_t>(data); }
  bool as_bool() const { return std::get<bool>(data); }
  const std::vector<Value>& as_array() const { return std::get<std::vector<Value>>(data); }
  double as_number() const {
    if (is_int()) return static_cast<double>(as_int());
    return std::get<double>(data);
  }
};

using Table = std::map<std::string, Value>;  // keys are "table.key" or "key"

namespace detail {

inline std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

// removes a trailing comment that is not inside a string
inline std::string strip_comment(const std::string& s) {
  bool in_str = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '"') in_str = !in_str;
    if (s[i] == '#' && !in_str) return s.substr(0, i);
  }
  return s;
}

inline Value parse_scalar(const std::string& tok, int line) {
  if (tok.empty()) throw ParseError(line, "empty value");
  if (tok.front() == '"') {
    if (tok.size() < 2 || tok.back() != '"') throw ParseError(line, "unterminated string");
    return Value{tok.substr(1, tok.size() - 2)};
  }
  if (tok == "true") return Value{true};
  if (tok == "false") return Value{false};
  bool looks_float = tok.find_first_of(".eE") != std::string::npos &&
                     tok.find_first_not_of("+-0123456789.eE") == std::string::npos;
  try {
    std::size_t used = 0;
    if (!looks_float) {
      std::int64_t v = std::stoll(tok, &used);
      if (used == tok.size()) return Value{v};
    }
    double d = std::stod(tok, &used);
    if (used == tok.size()) return Value{d};
  } catch (const std::exception&) {
  }
  throw ParseError(line, "cannot parse value '" + tok + "'");
}

inline Value parse_value(const std::string& raw, int line) {
  std::string s = strip(raw);
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw ParseError(line, "unterminated array (arrays must be single-line)");
    std::vector<Value> items;
    std::string body = s.substr(1, s.size() - 2);
    std::string cur;
    bool in_str = false;
    for (char c : body) {
      if (c == '"') in_str = !in_str;
      if (c == ',' && !in_str) {
        std::string t = strip(cur);
        if (!t.empty()) items.push_back(parse_scalar(t, line));
        cur.clear();
      } else {
        cur += c;
      }
    }
    std::string t = strip(cur);
    if (!t.empty()) items.push_back(parse_scalar(t, line));
    return Value{std::move(items)};
  }
  return parse_scalar(s, line);
}

}  // namespace detail

inline Table parse(const std::string& text) {
  Table out;
  std::istringstream in(text);
  std::string raw;
  std::string section;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = detail::strip(detail::strip_comment(raw));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError(line_no, "unterminated table header");
      section = detail::strip(line.substr(1, line.size() - 2));
      if (section.empty()) throw ParseError(line_no, "empty table name");
      continue;
    }
    std::size_t eq = std::string::npos;
    bool in_str = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '"') in_str = !in_str;
      if (line[i] == '=' && !in_str) {
        eq = i;
        break;
      }
    }
    if (eq == std::string::npos) throw ParseError(line_no, "expected 'key = value'");
    std::string key = detail::strip(line.substr(0, eq));
    if (key.empty()) throw ParseError(line_no, "empty key");
    std::string full = section.empty() ? key : section + "." + key;
    out[full] = detail::parse_value(line.substr(eq + 1), line_no);
  }
  return out;
}

}  // namespace gpswarm::toml
