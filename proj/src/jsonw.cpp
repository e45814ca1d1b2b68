#include "anharm/jsonw.hpp"

#include <cmath>
#include <cstdio>

namespace anharm::jsonw {

std::string num(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string num(int v) { return std::to_string(v); }
std::string num(long long v) { return std::to_string(v); }

std::string str(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += "\"";
  return out;
}

Value::Value(const Object& o) : text_(o.dump()) {}
Value::Value(const Array& a) : text_(a.dump()) {}

Array Array::of_complex(const std::vector<std::complex<double>>& xs) {
  Array a;
  for (const auto& z : xs) {
    Array pair;
    pair.push(z.real());
    pair.push(z.imag());
    a.push(pair);
  }
  return a;
}

std::string Array::dump() const {
  std::string out = "[";
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (i) out += ",";
    out += items_[i];
  }
  out += "]";
  return out;
}

std::string Object::dump() const {
  std::string out = "{";
  for (std::size_t i = 0; i < keys_.size(); ++i) {
    if (i) out += ",";
    out += str(keys_[i]) + ":" + vals_[i];
  }
  out += "}";
  return out;
}

}  // namespace anharm::jsonw
