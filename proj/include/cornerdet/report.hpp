#ifndef CORNERDET_REPORT_HPP
#define CORNERDET_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

#include "cornerdet/types.hpp"

namespace cornerdet {

// %.{precision}g with a ".0" suffix when the result would otherwise read as
// an integer; keeps floating-point fields visibly floating-point and makes
// output byte-deterministic across locales.
std::string format_number(double v, int precision = 17);

std::string format_integer(long long v);

// True when the imaginary part is negligible against the real part (or both
// vanish); such values serialize as plain numbers.
bool collapses_to_real(Cplx v);

// JSON fragment: plain number, or {"re":...,"im":...}.
std::string format_complex_json(Cplx v, int precision = 17);

// Flat literal "a+bi" as accepted by the CLI flag grammar; collapses to a
// plain number like the JSON form. Used for CSV cells.
std::string format_complex_literal(Cplx v, int precision = 17);

std::string escape_json_string(const std::string& s);

// Append-only object builder; field order is insertion order.
class JsonBuilder {
 public:
  JsonBuilder& add_integer(const std::string& name, long long v);
  JsonBuilder& add_number(const std::string& name, double v, int precision = 17);
  JsonBuilder& add_complex(const std::string& name, Cplx v, int precision = 17);
  JsonBuilder& add_string(const std::string& name, const std::string& v);
  JsonBuilder& add_bool(const std::string& name, bool v);
  JsonBuilder& add_raw(const std::string& name, const std::string& json_fragment);
  std::string str() const;

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

std::string json_array_numbers(const std::vector<double>& v, int precision = 17);
std::string json_array_complex(const std::vector<Cplx>& v, int precision = 17);
std::string json_array_integers(const std::vector<long long>& v);
std::string json_array_strings(const std::vector<std::string>& v);
std::string json_array_raw(const std::vector<std::string>& fragments);

class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);
  void add_row(const std::vector<std::string>& cells);
  std::string str() const { return out_; }

 private:
  size_t width_;
  std::string out_;
};

}  // namespace cornerdet

#endif
