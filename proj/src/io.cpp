#include "sturm/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

namespace sturm {

std::string format_g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void save_csv(const std::string& path, const GridFunction& f) {
  std::ofstream out(path);
  if (!out)
    throw Error(ErrorCode::usage, "cannot open " + path + " for writing");
  out << "x,re,im\n";
  for (Index i = 0; i < f.size(); ++i)
    out << format_g17(f.node(i)) << ',' << format_g17(f.values()[i].real())
        << ',' << format_g17(f.values()[i].imag()) << '\n';
  if (!out) throw Error(ErrorCode::usage, "write failed on " + path);
}

namespace {

// Strict double parse of one CSV field.
double parse_field(const std::string& field, const std::string& path,
                   long line) {
  const char* s = field.c_str();
  char* end = nullptr;
  const double v = std::strtod(s, &end);
  while (end && *end == ' ') ++end;
  if (end == s || (end && *end != '\0'))
    throw Error(ErrorCode::parse,
                path + " line " + std::to_string(line) +
                    ": not a number: \"" + field + "\"",
                line);
  if (!std::isfinite(v))
    throw Error(ErrorCode::parse,
                path + " line " + std::to_string(line) + ": non-finite value",
                line);
  return v;
}

}  // namespace

GridFunction load_csv(const std::string& path, bool require_real) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::parse, "cannot open " + path);
  std::string line;
  long lineno = 0;
  if (!std::getline(in, line))
    throw Error(ErrorCode::parse, path + ": empty file");
  ++lineno;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "x,re,im")
    throw Error(ErrorCode::parse,
                path + " line 1: expected header \"x,re,im\"", 1);

  std::vector<double> xs;
  std::vector<Complex> vals;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 3)
      throw Error(ErrorCode::parse,
                  path + " line " + std::to_string(lineno) +
                      ": expected 3 fields, got " +
                      std::to_string(fields.size()),
                  lineno);
    const double x = parse_field(fields[0], path, lineno);
    const double re = parse_field(fields[1], path, lineno);
    const double im = parse_field(fields[2], path, lineno);
    if (!xs.empty() && x <= xs.back())
      throw Error(ErrorCode::parse,
                  path + " line " + std::to_string(lineno) +
                      ": abscissae must increase",
                  lineno);
    xs.push_back(x);
    vals.emplace_back(re, im);
  }
  if (xs.empty()) throw Error(ErrorCode::parse, path + ": no data rows");

  const Index P = static_cast<Index>(xs.size());
  double length = 0.0;
  for (double L : {1.0, 2.0}) {
    const double h = L / static_cast<double>(P);
    bool ok = true;
    for (Index i = 0; i < P && ok; ++i)
      ok = std::abs(xs[static_cast<std::size_t>(i)] - (i + 0.5) * h) <= 1e-12;
    if (ok) {
      length = L;
      break;
    }
  }
  if (length == 0.0)
    throw Error(ErrorCode::parse,
                path + ": abscissae are not midpoints of a uniform grid on "
                       "[0,1] or [0,2]");

  ComplexVector v(P);
  for (Index i = 0; i < P; ++i) v[i] = vals[static_cast<std::size_t>(i)];
  GridFunction f(length, std::move(v));
  if (require_real && !f.is_real())
    throw Error(ErrorCode::parse, path + ": expected real-valued data");
  return f;
}

namespace {

Vector as_vector(const nlohmann::json& arr, const std::string& path,
                 const std::string& key) {
  if (!arr.is_array())
    throw Error(ErrorCode::parse, path + ": \"" + key + "\" must be an array");
  Vector v(static_cast<Index>(arr.size()));
  Index i = 0;
  for (const auto& item : arr) {
    if (!item.is_number())
      throw Error(ErrorCode::parse,
                  path + ": \"" + key + "\" entry " + std::to_string(i + 1) +
                      " is not a number",
                  i + 1);
    v[i++] = item.get<double>();
  }
  return v;
}

nlohmann::json vector_json(const Vector& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

}  // namespace

TwoSpectra SpectralDocument::to_two_spectra() const {
  if (!mu)
    throw Error(ErrorCode::usage, "document carries no quasi-Neumann spectrum");
  return TwoSpectra(lambda, *mu, s, tail);
}

NormingSpectra SpectralDocument::to_norming_spectra() const {
  if (!alpha)
    throw Error(ErrorCode::usage, "document carries no norming constants");
  return NormingSpectra(lambda, *alpha, s, tail);
}

SpectralDocument SpectralDocument::from(const TwoSpectra& data) {
  SpectralDocument doc;
  doc.s = data.weight_s();
  doc.lambda = data.lambda();
  doc.mu = data.mu();
  doc.tail = data.tail();
  return doc;
}

SpectralDocument SpectralDocument::from(const NormingSpectra& data) {
  SpectralDocument doc;
  doc.s = data.weight_s();
  doc.lambda = data.lambda();
  doc.alpha = data.alpha();
  doc.tail = data.tail();
  return doc;
}

SpectralDocument load_spectra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::parse, "cannot open " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::parse, path + ": " + e.what());
  }
  if (!j.is_object())
    throw Error(ErrorCode::parse, path + ": document must be a JSON object");

  SpectralDocument doc;
  if (j.contains("s") && !j["s"].is_null()) {
    if (!j["s"].is_number())
      throw Error(ErrorCode::parse, path + ": \"s\" must be a number");
    doc.s = j["s"].get<double>();
  }
  if (!j.contains("lambda"))
    throw Error(ErrorCode::parse, path + ": missing \"lambda\"");
  doc.lambda = as_vector(j["lambda"], path, "lambda");
  if (j.contains("mu") && !j["mu"].is_null())
    doc.mu = as_vector(j["mu"], path, "mu");
  if (j.contains("alpha") && !j["alpha"].is_null())
    doc.alpha = as_vector(j["alpha"], path, "alpha");
  if (!doc.mu && !doc.alpha)
    throw Error(ErrorCode::parse,
                path + ": document needs \"mu\" or \"alpha\"");
  if (j.contains("tail") && !j["tail"].is_null()) {
    if (!j["tail"].is_string() || j["tail"] != "unperturbed_pad")
      throw Error(ErrorCode::parse,
                  path + ": unknown \"tail\" (expected \"unperturbed_pad\")");
  }
  return doc;
}

void save_spectra(const std::string& path, const SpectralDocument& doc) {
  nlohmann::json j;
  j["s"] = doc.s;
  j["lambda"] = vector_json(doc.lambda);
  j["mu"] = doc.mu ? vector_json(*doc.mu) : nlohmann::json();
  j["alpha"] = doc.alpha ? vector_json(*doc.alpha) : nlohmann::json();
  j["tail"] = "unperturbed_pad";
  write_json_file(path, j);
}

namespace {

void dump_impl(std::string& out, const nlohmann::json& j, int depth) {
  const std::string pad(2 * static_cast<std::size_t>(depth), ' ');
  const std::string pad_in(2 * static_cast<std::size_t>(depth + 1), ' ');
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad_in + nlohmann::json(key).dump() + ": ";
        dump_impl(out, value, depth + 1);
      }
      out += "\n" + pad + "}";
      return;
    }
    case nlohmann::json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      bool first = true;
      for (const auto& item : j) {
        if (!first) out += ",\n";
        first = false;
        out += pad_in;
        dump_impl(out, item, depth + 1);
      }
      out += "\n" + pad + "]";
      return;
    }
    case nlohmann::json::value_t::number_float: {
      const double v = j.get<double>();
      out += std::isfinite(v) ? format_g17(v) : "null";
      return;
    }
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

std::string dump_json(const nlohmann::json& j) {
  std::string out;
  dump_impl(out, j, 0);
  out += "\n";
  return out;
}

void write_json_file(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out)
    throw Error(ErrorCode::usage, "cannot open " + path + " for writing");
  out << dump_json(j);
  if (!out) throw Error(ErrorCode::usage, "write failed on " + path);
}

}  // namespace sturm
