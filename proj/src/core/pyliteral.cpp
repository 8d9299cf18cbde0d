// Copyright 2026 The difforacle Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "core/pyliteral.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>

namespace difforacle {
namespace {

class LiteralParser {
 public:
  LiteralParser(std::string_view text, std::size_t pos) : s_(text), pos_(pos) {}

  std::optional<Value> value() {
    skip_ws();
    if (at_end()) return std::nullopt;
    char c = s_[pos_];
    if (c == '[') return sequence('[', ']', false);
    if (c == '(') return sequence('(', ')', true);
    if (c == '{') return dict();
    if (c == '"' || c == '\'') return string();
    if ((c == 'r' || c == 'R' || c == 'u' || c == 'U') && pos_ + 1 < s_.size() &&
        (s_[pos_ + 1] == '"' || s_[pos_ + 1] == '\'')) {
      bool raw = (c == 'r' || c == 'R');
      ++pos_;
      return string(raw);
    }
    if (c == '-' || c == '+' || c == '.' || std::isdigit(static_cast<unsigned char>(c)))
      return number();
    if (consume_word("True")) return Value(true);
    if (consume_word("False")) return Value(false);
    if (consume_word("None")) return Value(nullptr);
    if (consume_word("float")) return special_float();
    return std::nullopt;
  }

  std::size_t pos() const { return pos_; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }

  bool consume(char c) {
    skip_ws();
    if (!at_end() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool consume_word(std::string_view w) {
    if (s_.substr(pos_, w.size()) != w) return false;
    std::size_t after = pos_ + w.size();
    if (after < s_.size() &&
        (std::isalnum(static_cast<unsigned char>(s_[after])) || s_[after] == '_'))
      return false;
    pos_ = after;
    return true;
  }

  std::optional<Value> sequence(char open, char close, bool tuple) {
    ++pos_;  // open
    Value items = Value::array();
    bool trailing_comma = false;
    skip_ws();
    if (consume(close)) return tuple ? make_tuple(items) : items;
    while (true) {
      auto v = value();
      if (!v) return std::nullopt;
      items.push_back(std::move(*v));
      trailing_comma = false;
      if (consume(',')) {
        trailing_comma = true;
        if (consume(close)) break;
        continue;
      }
      if (consume(close)) break;
      return std::nullopt;
    }
    (void)open;
    // (x) is a parenthesized expression, not a tuple.
    if (tuple && items.size() == 1 && !trailing_comma) return items[0];
    return tuple ? make_tuple(items) : items;
  }

  std::optional<Value> dict() {
    ++pos_;
    std::vector<std::pair<Value, Value>> pairs;
    if (!consume('}')) {
      while (true) {
        auto k = value();
        if (!k || !consume(':')) return std::nullopt;
        auto v = value();
        if (!v) return std::nullopt;
        pairs.emplace_back(std::move(*k), std::move(*v));
        if (consume(',')) {
          if (consume('}')) break;
          continue;
        }
        if (consume('}')) break;
        return std::nullopt;
      }
    }
    bool string_keys = true;
    for (const auto& [k, v] : pairs) string_keys = string_keys && k.is_string();
    if (string_keys) {
      Value obj = Value::object();
      for (auto& [k, v] : pairs) obj[k.get<std::string>()] = std::move(v);
      return obj;
    }
    Value arr = Value::array();
    for (auto& [k, v] : pairs) arr.push_back(Value::array({std::move(k), std::move(v)}));
    return make_tagged(tag::kDict, std::move(arr));
  }

  static void append_utf8(std::string& out, std::uint32_t cp) {
    if (cp < 0x80) {
      out += static_cast<char>(cp);
    } else if (cp < 0x800) {
      out += static_cast<char>(0xC0 | (cp >> 6));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
      out += static_cast<char>(0xE0 | (cp >> 12));
      out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
      out += static_cast<char>(0xF0 | (cp >> 18));
      out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
      out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    }
  }

  std::optional<std::uint32_t> hex(std::size_t digits) {
    if (pos_ + digits > s_.size()) return std::nullopt;
    std::uint32_t cp = 0;
    auto r = std::from_chars(s_.data() + pos_, s_.data() + pos_ + digits, cp, 16);
    if (r.ptr != s_.data() + pos_ + digits) return std::nullopt;
    pos_ += digits;
    return cp;
  }

  std::optional<Value> string(bool raw = false) {
    char q = s_[pos_];
    bool triple = s_.substr(pos_, 3) == std::string(3, q);
    pos_ += triple ? 3 : 1;
    std::string out;
    while (!at_end()) {
      char c = s_[pos_];
      if (c == q) {
        if (!triple) {
          ++pos_;
          return Value(out);
        }
        if (s_.substr(pos_, 3) == std::string(3, q)) {
          pos_ += 3;
          return Value(out);
        }
      }
      if (c == '\n' && !triple) return std::nullopt;
      if (c == '\\' && pos_ + 1 < s_.size()) {
        char e = s_[pos_ + 1];
        if (raw) {
          out += c;
          out += e;
          pos_ += 2;
          continue;
        }
        pos_ += 2;
        switch (e) {
          case 'n': out += '\n'; break;
          case 't': out += '\t'; break;
          case 'r': out += '\r'; break;
          case '0': out += '\0'; break;
          case '\\': out += '\\'; break;
          case '\'': out += '\''; break;
          case '"': out += '"'; break;
          case '\n': break;
          case 'x': {
            auto cp = hex(2);
            if (!cp) return std::nullopt;
            append_utf8(out, *cp);
            break;
          }
          case 'u': {
            auto cp = hex(4);
            if (!cp) return std::nullopt;
            append_utf8(out, *cp);
            break;
          }
          default:
            out += '\\';
            out += e;
        }
        continue;
      }
      out += c;
      ++pos_;
    }
    return std::nullopt;
  }

  std::optional<Value> number() {
    std::size_t start = pos_;
    bool negative = false;
    if (s_[pos_] == '-' || s_[pos_] == '+') {
      negative = s_[pos_] == '-';
      ++pos_;
      skip_ws();
      if (consume_word("float")) {
        auto f = special_float();
        if (!f) return std::nullopt;
        return negative ? Value(-f->get<double>()) : *f;
      }
      if (consume_word("True")) return Value(negative ? -1 : 1);
      if (consume_word("False")) return Value(0);
    }
    std::string digits;
    bool is_float = false;
    while (!at_end()) {
      char c = s_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        digits += c;
      } else if (c == '_') {
        // digit separator
      } else if (c == '.' || c == 'e' || c == 'E') {
        is_float = true;
        digits += c;
        if ((c == 'e' || c == 'E') && pos_ + 1 < s_.size() &&
            (s_[pos_ + 1] == '-' || s_[pos_ + 1] == '+')) {
          digits += s_[++pos_];
        }
      } else if (c == 'x' || c == 'X') {
        if (digits != "0") return std::nullopt;
        ++pos_;
        std::string hexdigits;
        while (!at_end() && (std::isxdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
          if (s_[pos_] != '_') hexdigits += s_[pos_];
          ++pos_;
        }
        std::int64_t v = 0;
        auto r = std::from_chars(hexdigits.data(), hexdigits.data() + hexdigits.size(), v, 16);
        if (hexdigits.empty() || r.ptr != hexdigits.data() + hexdigits.size()) return std::nullopt;
        return Value(negative ? -v : v);
      } else {
        break;
      }
      ++pos_;
    }
    if (digits.empty() || digits == ".") {
      pos_ = start;
      return std::nullopt;
    }
    if (is_float) {
      char* end = nullptr;
      std::string text = (negative ? "-" : "") + digits;
      double d = std::strtod(text.c_str(), &end);
      if (end != text.c_str() + text.size()) return std::nullopt;
      return Value(d);
    }
    std::int64_t v = 0;
    std::string text = (negative ? "-" : "") + digits;
    auto r = std::from_chars(text.data(), text.data() + text.size(), v);
    if (r.ec == std::errc() && r.ptr == text.data() + text.size()) return Value(v);
    std::size_t nz = digits.find_first_not_of('0');
    std::string norm = nz == std::string::npos ? "0" : digits.substr(nz);
    return make_tagged(tag::kBigInt, (negative && norm != "0" ? "-" : "") + norm);
  }

  std::optional<Value> special_float() {
    if (!consume('(')) return std::nullopt;
    auto arg = value();
    if (!arg || !consume(')')) return std::nullopt;
    if (arg->is_number()) return Value(arg->get<double>());
    if (!arg->is_string()) return std::nullopt;
    std::string a = arg->get<std::string>();
    for (auto& ch : a) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (a == "inf" || a == "+inf" || a == "infinity") return Value(std::numeric_limits<double>::infinity());
    if (a == "-inf" || a == "-infinity") return Value(-std::numeric_limits<double>::infinity());
    if (a == "nan") return Value(std::numeric_limits<double>::quiet_NaN());
    char* end = nullptr;
    double d = std::strtod(a.c_str(), &end);
    if (a.empty() || end != a.c_str() + a.size()) return std::nullopt;
    return Value(d);
  }

  std::string_view s_;
  std::size_t pos_;
};

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

std::optional<Value> parse_literal_prefix(std::string_view text, std::size_t& pos) {
  LiteralParser p(text, pos);
  auto v = p.value();
  if (v) pos = p.pos();
  return v;
}

std::optional<Value> parse_python_literal(std::string_view text) {
  LiteralParser p(text, 0);
  auto v = p.value();
  if (!v) return std::nullopt;
  p.skip_ws();
  if (p.pos() != text.size()) return std::nullopt;
  return v;
}

std::optional<ParsedCall> find_call(std::string_view text, std::string_view entry_point) {
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!ident_char(text[i]) || std::isdigit(static_cast<unsigned char>(text[i]))) continue;
    if (i > 0 && (ident_char(text[i - 1]) || text[i - 1] == '.')) continue;
    std::size_t j = i;
    while (j < text.size() && ident_char(text[j])) ++j;
    std::string_view name = text.substr(i, j - i);
    std::size_t k = j;
    while (k < text.size() && text[k] == ' ') ++k;
    if (k >= text.size() || text[k] != '(' ||
        (!entry_point.empty() && name != entry_point)) {
      i = j - 1;
      continue;
    }
    // Arguments: literal (',' literal)* ','? ')'
    std::size_t pos = k + 1;
    ParsedCall call{std::string(name), {}, 0};
    bool ok = true;
    auto skip = [&] {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip();
    if (pos < text.size() && text[pos] == ')') {
      call.end = pos + 1;
      return call;
    }
    while (true) {
      auto v = parse_literal_prefix(text, pos);
      if (!v) {
        ok = false;
        break;
      }
      call.args.push_back(std::move(*v));
      skip();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        skip();
        if (pos < text.size() && text[pos] == ')') {
          call.end = pos + 1;
          return call;
        }
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        call.end = pos + 1;
        return call;
      }
      ok = false;
      break;
    }
    if (!ok) i = j - 1;
  }
  return std::nullopt;
}

}  // namespace difforacle
