#pragma once

#include <complex>
#include <string>
#include <vector>

namespace anharm::jsonw {

// Minimal JSON writer with fixed field order and fixed float formatting
// (17 significant digits) so identical inputs produce byte-identical output.

std::string num(double v);
std::string num(int v);
std::string num(long long v);
std::string str(const std::string& s);

class Object;
class Array;

class Value {
 public:
  Value() : text_("null") {}
  Value(const char* s) : text_(str(s)) {}
  Value(const std::string& s) : text_(str(s)) {}
  Value(double v) : text_(num(v)) {}
  Value(int v) : text_(num(v)) {}
  Value(long long v) : text_(num(v)) {}
  Value(std::size_t v) : text_(num(static_cast<long long>(v))) {}
  Value(bool v) : text_(v ? "true" : "false") {}
  Value(const Object& o);
  Value(const Array& a);
  const std::string& text() const { return text_; }

 private:
  std::string text_;
};

class Array {
 public:
  Array& push(const Value& v) {
    items_.push_back(v.text());
    return *this;
  }
  template <typename T>
  static Array of(const std::vector<T>& xs) {
    Array a;
    for (const auto& x : xs) a.push(Value(x));
    return a;
  }
  static Array of_complex(const std::vector<std::complex<double>>& xs);
  std::string dump() const;

 private:
  std::vector<std::string> items_;
};

class Object {
 public:
  Object& put(const std::string& key, const Value& v) {
    keys_.push_back(key);
    vals_.push_back(v.text());
    return *this;
  }
  std::string dump() const;

 private:
  std::vector<std::string> keys_;
  std::vector<std::string> vals_;
};

}  // namespace anharm::jsonw
