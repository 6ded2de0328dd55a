#include "ptm/util/toml.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "ptm/util/error.hpp"
#include "ptm/util/strings.hpp"

namespace ptm::util {

using json = nlohmann::ordered_json;

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;
  std::size_t line = 1;
  const std::string& source;

  [[noreturn]] void fail(const std::string& what) const {
    throw parse_error(source + ":" + std::to_string(line) + ": " + what);
  }
  bool eof() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  char take() { return text[pos++]; }
  void skip_inline_ws() {
    while (!eof() && (peek() == ' ' || peek() == '\t')) ++pos;
  }
};

std::string parse_basic_string(Cursor& c) {
  // opening quote already consumed
  std::string out;
  while (!c.eof()) {
    char ch = c.take();
    if (ch == '"') return out;
    if (ch == '\n') c.fail("unterminated string");
    if (ch == '\\') {
      if (c.eof()) c.fail("dangling escape");
      char esc = c.take();
      switch (esc) {
        case 'n': out.push_back('\n'); break;
        case 't': out.push_back('\t'); break;
        case 'r': out.push_back('\r'); break;
        case '"': out.push_back('"'); break;
        case '\\': out.push_back('\\'); break;
        default: c.fail(std::string("unsupported escape \\") + esc);
      }
    } else {
      out.push_back(ch);
    }
  }
  c.fail("unterminated string");
}

json parse_scalar_token(Cursor& c, const std::string& token) {
  if (token == "true") return true;
  if (token == "false") return false;
  // integer or float
  bool is_number = !token.empty();
  bool has_float_marker = false;
  for (std::size_t i = 0; i < token.size() && is_number; ++i) {
    char ch = token[i];
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '_') continue;
    if ((ch == '+' || ch == '-') && (i == 0 || token[i - 1] == 'e' || token[i - 1] == 'E'))
      continue;
    if (ch == '.' || ch == 'e' || ch == 'E') {
      has_float_marker = true;
      continue;
    }
    is_number = false;
  }
  if (!is_number) c.fail("cannot parse value \"" + token + "\"");
  std::string digits;
  for (char ch : token)
    if (ch != '_') digits.push_back(ch);
  try {
    if (has_float_marker) return std::stod(digits);
    return static_cast<std::int64_t>(std::stoll(digits));
  } catch (const std::exception&) {
    c.fail("cannot parse number \"" + token + "\"");
  }
}

json parse_value(Cursor& c);

json parse_array(Cursor& c) {
  // '[' already consumed
  json arr = json::array();
  for (;;) {
    c.skip_inline_ws();
    while (!c.eof() && (peek_is_newline(c) || c.peek() == '#')) {
      // allow multi-line arrays and comments inside them
      if (c.peek() == '#') {
        while (!c.eof() && c.peek() != '\n') c.take();
      } else {
        c.take();
        ++c.line;
      }
      c.skip_inline_ws();
    }
    if (c.eof()) c.fail("unterminated array");
    if (c.peek() == ']') {
      c.take();
      return arr;
    }
    arr.push_back(parse_value(c));
    c.skip_inline_ws();
    while (!c.eof() && (peek_is_newline(c) || c.peek() == '#')) {
      if (c.peek() == '#') {
        while (!c.eof() && c.peek() != '\n') c.take();
      } else {
        c.take();
        ++c.line;
      }
      c.skip_inline_ws();
    }
    if (c.eof()) c.fail("unterminated array");
    if (c.peek() == ',') {
      c.take();
      continue;
    }
    if (c.peek() == ']') {
      c.take();
      return arr;
    }
    c.fail("expected ',' or ']' in array");
  }
}

bool peek_is_newline(const Cursor& c) { return !c.eof() && c.text[c.pos] == '\n'; }

json parse_value(Cursor& c) {
  c.skip_inline_ws();
  if (c.eof()) c.fail("expected value");
  char ch = c.peek();
  if (ch == '"') {
    c.take();
    return parse_basic_string(c);
  }
  if (ch == '[') {
    c.take();
    return parse_array(c);
  }
  std::string token;
  while (!c.eof() && c.peek() != '\n' && c.peek() != '#' && c.peek() != ',' &&
         c.peek() != ']') {
    token.push_back(c.take());
  }
  token = normalize_ws(token);
  if (token.empty()) c.fail("expected value");
  return parse_scalar_token(c, token);
}

std::vector<std::string> split_dotted_key(Cursor& c, const std::string& raw) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : raw) {
    if (ch == '.') {
      if (cur.empty()) c.fail("empty key segment");
      parts.push_back(normalize_ws(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (normalize_ws(cur).empty()) c.fail("empty key segment");
  parts.push_back(normalize_ws(cur));
  return parts;
}

json* descend(json& root, const std::vector<std::string>& parts, Cursor& c) {
  json* node = &root;
  for (const auto& part : parts) {
    if (node->is_array()) node = &node->back();
    if (!node->is_object()) c.fail("key path collides with a non-table value");
    if (!node->contains(part)) (*node)[part] = json::object();
    node = &(*node)[part];
  }
  if (node->is_array()) node = &node->back();
  return node;
}

}  // namespace

json parse_toml(const std::string& text, const std::string& source_name) {
  json root = json::object();
  Cursor c{text, 0, 1, source_name};
  json* current = &root;

  while (!c.eof()) {
    c.skip_inline_ws();
    if (c.eof()) break;
    char ch = c.peek();
    if (ch == '\n') {
      c.take();
      ++c.line;
      continue;
    }
    if (ch == '#') {
      while (!c.eof() && c.peek() != '\n') c.take();
      continue;
    }
    if (ch == '[') {
      c.take();
      bool array_of_tables = !c.eof() && c.peek() == '[';
      if (array_of_tables) c.take();
      std::string header;
      while (!c.eof() && c.peek() != ']') header.push_back(c.take());
      if (c.eof()) c.fail("unterminated table header");
      c.take();
      if (array_of_tables) {
        if (c.eof() || c.take() != ']') c.fail("expected ]] to close array-of-tables header");
      }
      auto parts = split_dotted_key(c, header);
      json* node = &root;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        const bool last = i + 1 == parts.size();
        if (node->is_array()) node = &node->back();
        if (!node->is_object()) c.fail("table header collides with a value");
        if (last && array_of_tables) {
          if (!node->contains(parts[i])) (*node)[parts[i]] = json::array();
          if (!(*node)[parts[i]].is_array()) c.fail("redefinition of table as array");
          (*node)[parts[i]].push_back(json::object());
          node = &(*node)[parts[i]];
        } else {
          if (!node->contains(parts[i])) (*node)[parts[i]] = json::object();
          node = &(*node)[parts[i]];
        }
      }
      current = node->is_array() ? &node->back() : node;
      continue;
    }
    // key = value
    std::string raw_key;
    while (!c.eof() && c.peek() != '=' && c.peek() != '\n') raw_key.push_back(c.take());
    if (c.eof() || c.peek() != '=') c.fail("expected '=' after key");
    c.take();
    auto parts = split_dotted_key(c, raw_key);
    json value = parse_value(c);
    c.skip_inline_ws();
    if (!c.eof() && c.peek() == '#')
      while (!c.eof() && c.peek() != '\n') c.take();
    if (!c.eof() && c.peek() != '\n') c.fail("trailing characters after value");

    json* table = current;
    if (parts.size() > 1) {
      std::vector<std::string> prefix(parts.begin(), parts.end() - 1);
      table = descend(*current, prefix, c);
    }
    (*table)[parts.back()] = std::move(value);
  }
  return root;
}

json load_toml(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_toml(buf.str(), path.string());
}

}  // namespace ptm::util
