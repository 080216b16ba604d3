#include "cornerdet/report.hpp"

#include <cmath>
#include <cstdio>

#include "cornerdet/errors.hpp"

namespace cornerdet {

std::string format_number(double v, int precision) {
  if (precision < 1) precision = 1;
  if (precision > 17) precision = 17;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
  std::string s(buf);
  if (!std::isfinite(v)) return s;
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

std::string format_integer(long long v) { return std::to_string(v); }

bool collapses_to_real(Cplx v) {
  return std::abs(v.imag()) <= 1e-12 * std::abs(v.real());
}

std::string format_complex_json(Cplx v, int precision) {
  if (collapses_to_real(v)) return format_number(v.real(), precision);
  return "{\"re\":" + format_number(v.real(), precision) +
         ",\"im\":" + format_number(v.imag(), precision) + "}";
}

std::string format_complex_literal(Cplx v, int precision) {
  if (collapses_to_real(v)) return format_number(v.real(), precision);
  const double im = v.imag();
  std::string tail = im < 0 ? "-" + format_number(-im, precision)
                            : "+" + format_number(im, precision);
  return format_number(v.real(), precision) + tail + "i";
}

std::string escape_json_string(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
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
  return out;
}

JsonBuilder& JsonBuilder::add_integer(const std::string& name, long long v) {
  fields_.emplace_back(name, format_integer(v));
  return *this;
}

JsonBuilder& JsonBuilder::add_number(const std::string& name, double v, int precision) {
  fields_.emplace_back(name, format_number(v, precision));
  return *this;
}

JsonBuilder& JsonBuilder::add_complex(const std::string& name, Cplx v, int precision) {
  fields_.emplace_back(name, format_complex_json(v, precision));
  return *this;
}

JsonBuilder& JsonBuilder::add_string(const std::string& name, const std::string& v) {
  fields_.emplace_back(name, "\"" + escape_json_string(v) + "\"");
  return *this;
}

JsonBuilder& JsonBuilder::add_bool(const std::string& name, bool v) {
  fields_.emplace_back(name, v ? "true" : "false");
  return *this;
}

JsonBuilder& JsonBuilder::add_raw(const std::string& name, const std::string& json_fragment) {
  fields_.emplace_back(name, json_fragment);
  return *this;
}

std::string JsonBuilder::str() const {
  std::string out = "{";
  for (size_t i = 0; i < fields_.size(); ++i) {
    if (i) out += ",";
    out += "\"" + escape_json_string(fields_[i].first) + "\":" + fields_[i].second;
  }
  out += "}";
  return out;
}

namespace {

template <typename T, typename F>
std::string join_array(const std::vector<T>& v, F format) {
  std::string out = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += format(v[i]);
  }
  out += "]";
  return out;
}

}  // namespace

std::string json_array_numbers(const std::vector<double>& v, int precision) {
  return join_array(v, [precision](double x) { return format_number(x, precision); });
}

std::string json_array_complex(const std::vector<Cplx>& v, int precision) {
  return join_array(v, [precision](Cplx x) { return format_complex_json(x, precision); });
}

std::string json_array_integers(const std::vector<long long>& v) {
  return join_array(v, [](long long x) { return format_integer(x); });
}

std::string json_array_strings(const std::vector<std::string>& v) {
  return join_array(v, [](const std::string& s) {
    return "\"" + escape_json_string(s) + "\"";
  });
}

std::string json_array_raw(const std::vector<std::string>& fragments) {
  return join_array(fragments, [](const std::string& s) { return s; });
}

CsvWriter::CsvWriter(std::vector<std::string> header) : width_(header.size()) {
  if (width_ == 0) throw ShapeError("csv header must name at least one column");
  for (size_t i = 0; i < header.size(); ++i) {
    if (i) out_ += ",";
    out_ += header[i];
  }
  out_ += "\n";
}

void CsvWriter::add_row(const std::vector<std::string>& cells) {
  if (cells.size() != width_) throw ShapeError("csv row width does not match header");
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ += ",";
    out_ += cells[i];
  }
  out_ += "\n";
}

}  // namespace cornerdet
