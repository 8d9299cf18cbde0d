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

#include "core/value.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <vector>

namespace difforacle {

Value make_tagged(std::string_view tag, Value payload) {
  return Value{{"__t", std::string(tag)}, {"v", std::move(payload)}};
}

Value make_tuple(Value elements) { return make_tagged(tag::kTuple, std::move(elements)); }

Value make_exception(std::string type_name) {
  return make_tagged(tag::kException, std::move(type_name));
}

std::optional<std::string> tag_of(const Value& v) {
  if (!v.is_object() || v.size() != 2) return std::nullopt;
  auto t = v.find("__t");
  if (t == v.end() || !t->is_string() || !v.contains("v")) return std::nullopt;
  return t->get<std::string>();
}

bool is_integer(const Value& v) { return v.is_number_integer() || v.is_number_unsigned(); }

namespace {

bool integers_equal(const Value& a, const Value& b) {
  if (a.is_number_unsigned() && b.is_number_unsigned())
    return a.get<std::uint64_t>() == b.get<std::uint64_t>();
  if (a.is_number_unsigned() || b.is_number_unsigned()) {
    const Value& u = a.is_number_unsigned() ? a : b;
    const Value& s = a.is_number_unsigned() ? b : a;
    auto sv = s.get<std::int64_t>();
    return sv >= 0 && static_cast<std::uint64_t>(sv) == u.get<std::uint64_t>();
  }
  return a.get<std::int64_t>() == b.get<std::int64_t>();
}

bool numbers_equal(const Value& a, const Value& b) {
  if (is_integer(a) && is_integer(b)) return integers_equal(a, b);
  double x = a.get<double>();
  double y = b.get<double>();
  if (x == y) return true;  // covers matching infinities
  return std::fabs(x - y) <= kNumericTolerance;
}

bool pairs_equal(const Value& a, const Value& b) {
  if (!a.is_array() || !b.is_array() || a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& pa : a) {
    bool matched = false;
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (used[i]) continue;
      const auto& pb = b[i];
      if (pa.size() == 2 && pb.size() == 2 && output_equal(pa[0], pb[0]) &&
          output_equal(pa[1], pb[1])) {
        used[i] = matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

}  // namespace

bool output_equal(const Value& a, const Value& b) {
  if (a.is_number() && b.is_number()) return numbers_equal(a, b);

  auto ta = tag_of(a);
  auto tb = tag_of(b);
  if (ta || tb) {
    if (ta != tb) return false;
    const Value& va = a.at("v");
    const Value& vb = b.at("v");
    if (*ta == tag::kTuple) return output_equal(va, vb);
    if (*ta == tag::kDict) return pairs_equal(va, vb);
    return va == vb;
  }

  if (a.type() != b.type()) return false;
  switch (a.type()) {
    case Value::value_t::array: {
      if (a.size() != b.size()) return false;
      for (std::size_t i = 0; i < a.size(); ++i)
        if (!output_equal(a[i], b[i])) return false;
      return true;
    }
    case Value::value_t::object: {
      if (a.size() != b.size()) return false;
      for (auto it = a.begin(); it != a.end(); ++it) {
        auto other = b.find(it.key());
        if (other == b.end() || !output_equal(it.value(), *other)) return false;
      }
      return true;
    }
    default:
      return a == b;
  }
}

std::string canonical(const Value& v) { return v.dump(); }

namespace {

std::string python_string(const std::string& s) {
  bool has_single = s.find('\'') != std::string::npos;
  bool has_double = s.find('"') != std::string::npos;
  char quote = (has_single && !has_double) ? '"' : '\'';
  std::string out(1, quote);
  for (unsigned char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c == static_cast<unsigned char>(quote)) {
          out += '\\';
          out += static_cast<char>(c);
        } else if (c < 0x20 || c == 0x7f) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\x%02x", c);
          out += buf;
        } else {
          out += static_cast<char>(c);
        }
    }
  }
  out += quote;
  return out;
}

std::string python_float(double d) {
  if (std::isnan(d)) return "float('nan')";
  if (std::isinf(d)) return d > 0 ? "float('inf')" : "float('-inf')";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, d);
  std::string s(buf, end);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

void append_literal(const Value& v, std::string& out) {
  if (auto t = tag_of(v)) {
    const Value& p = v.at("v");
    if (*t == tag::kTuple && p.is_array()) {
      out += '(';
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ", ";
        append_literal(p[i], out);
      }
      if (p.size() == 1) out += ',';
      out += ')';
      return;
    }
    if (*t == tag::kDict && p.is_array()) {
      out += '{';
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ", ";
        append_literal(p[i].at(0), out);
        out += ": ";
        append_literal(p[i].at(1), out);
      }
      out += '}';
      return;
    }
    if (*t == tag::kBigInt && p.is_string()) {
      out += p.get<std::string>();
      return;
    }
    if (*t == tag::kRepr && p.is_string()) {
      out += p.get<std::string>();
      return;
    }
    if (*t == tag::kException && p.is_string()) {
      out += "raises " + p.get<std::string>();
      return;
    }
  }
  switch (v.type()) {
    case Value::value_t::null: out += "None"; return;
    case Value::value_t::boolean: out += v.get<bool>() ? "True" : "False"; return;
    case Value::value_t::number_integer: out += std::to_string(v.get<std::int64_t>()); return;
    case Value::value_t::number_unsigned: out += std::to_string(v.get<std::uint64_t>()); return;
    case Value::value_t::number_float: out += python_float(v.get<double>()); return;
    case Value::value_t::string: out += python_string(v.get<std::string>()); return;
    case Value::value_t::array:
      out += '[';
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        append_literal(v[i], out);
      }
      out += ']';
      return;
    case Value::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) out += ", ";
        first = false;
        out += python_string(it.key());
        out += ": ";
        append_literal(it.value(), out);
      }
      out += '}';
      return;
    }
    default:
      out += v.dump();
  }
}

}  // namespace

std::string to_python_literal(const Value& v) {
  std::string out;
  append_literal(v, out);
  return out;
}

}  // namespace difforacle
