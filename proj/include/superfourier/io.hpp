#pragma once

/// Serialization: JSON documents (schema 1, full precision, complex values
/// as [re, im] pairs) and human-readable CSV rounded to 6 decimals.

#include <cstdio>
#include <string>

#include <json.hpp>

#include "superfourier/algebra.hpp"
#include "superfourier/table.hpp"
#include "superfourier/theory.hpp"
#include "superfourier/transform.hpp"

namespace superfourier {

using Json = nlohmann::ordered_json;

inline Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

inline std::string format_fixed(double v, int decimals = 6) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  // Avoid the "-0.000000" artifact.
  std::string s(buf);
  if (s.find_first_not_of("-0.") == std::string::npos && s[0] == '-') s.erase(0, 1);
  return s;
}

/// "1.000000" for (near-)real values, else "0.309017+0.951057i".
inline std::string format_complex_fixed(const Complex& z, int decimals = 6) {
  const double eps = 0.5 * std::pow(10.0, -decimals);
  if (std::abs(z.imag()) < eps) return format_fixed(z.real(), decimals);
  std::string s = format_fixed(z.real(), decimals);
  s += (z.imag() < 0 ? "-" : "+");
  s += format_fixed(std::abs(z.imag()), decimals);
  s += "i";
  return s;
}

inline std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline Json partition_to_json(const Theory& t) {
  Json doc;
  doc["schema"] = 1;
  doc["theory"] = t.name();
  doc["n"] = t.n();
  doc["d"] = t.d();
  doc["N"] = t.class_count();
  doc["symmetry"] = to_string(t.symmetry().kind);
  Json classes = Json::array();
  const auto& ys = t.y_classes();
  for (std::size_t i = 0; i < ys.class_count(); ++i)
    classes.push_back({{"rep", ys.superclass(i).rep.str()}, {"size", ys.superclass(i).size()}});
  doc["classes"] = std::move(classes);
  doc["negation"] = ys.negation_pairing();
  if (!t.is_symmetric()) {
    Json xclasses = Json::array();
    const auto& xs = t.x_classes();
    for (std::size_t i = 0; i < xs.class_count(); ++i)
      xclasses.push_back(
          {{"rep", xs.superclass(i).rep.str()}, {"size", xs.superclass(i).size()}});
    doc["classes_x"] = std::move(xclasses);
  }
  return doc;
}

inline Json table_to_json(const SupercharacterTable& t) {
  Json doc;
  doc["schema"] = 1;
  doc["theory"] = t.theory_name;
  doc["n"] = t.n;
  doc["d"] = t.d;
  doc["N"] = t.N;
  doc["symmetry"] = to_string(t.symmetry);
  Json reps_x = Json::array(), reps_y = Json::array();
  for (const auto& r : t.reps_x) reps_x.push_back(r.str());
  for (const auto& r : t.reps_y) reps_y.push_back(r.str());
  doc["reps_x"] = std::move(reps_x);
  doc["reps_y"] = std::move(reps_y);
  doc["sizes_x"] = t.sizes_x;
  doc["sizes_y"] = t.sizes_y;
  doc["negation"] = t.negation_x;
  Json rows = Json::array();
  for (std::size_t i = 0; i < t.N; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < t.N; ++j)
      row.push_back(complex_to_json(
          t.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))));
    rows.push_back(std::move(row));
  }
  doc["values"] = std::move(rows);
  return doc;
}

/// The paper's table layout: a representative row, a size row marked "#",
/// then one row per supercharacter.
inline std::string table_to_csv(const SupercharacterTable& t) {
  std::string out = csv_quote(t.theory_name);
  for (const auto& r : t.reps_y) out += "," + csv_quote(r.str());
  out += "\n#";
  for (u64 s : t.sizes_y) out += "," + std::to_string(s);
  out += "\n";
  for (std::size_t i = 0; i < t.N; ++i) {
    out += "sigma_" + std::to_string(i + 1);
    for (std::size_t j = 0; j < t.N; ++j)
      out += "," + format_complex_fixed(t.values(static_cast<Eigen::Index>(i),
                                                 static_cast<Eigen::Index>(j)));
    out += "\n";
  }
  return out;
}

inline Json unitary_to_json(const UnitaryU& u) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < u.m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < u.m.cols(); ++j) row.push_back(complex_to_json(u.m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json function_to_json(const ClassFunction& f) {
  Json arr = Json::array();
  for (Eigen::Index i = 0; i < f.size(); ++i) arr.push_back(complex_to_json(f(i)));
  return arr;
}

inline ClassFunction function_from_json(const Json& arr) {
  if (!arr.is_array()) throw bad_parameter_error("class function must be a JSON array");
  ClassFunction f(static_cast<Eigen::Index>(arr.size()));
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto& e = arr[i];
    if (e.is_number()) {
      f(static_cast<Eigen::Index>(i)) = Complex(e.get<double>(), 0.0);
    } else if (e.is_array() && e.size() == 2) {
      f(static_cast<Eigen::Index>(i)) = Complex(e[0].get<double>(), e[1].get<double>());
    } else {
      throw bad_parameter_error("class-function entries must be numbers or [re, im] pairs");
    }
  }
  return f;
}

inline Json structure_constants_to_json(const StructureConstants& sc) {
  Json tensor = Json::array();
  for (std::size_t i = 0; i < sc.N; ++i) {
    Json plane = Json::array();
    for (std::size_t j = 0; j < sc.N; ++j) {
      Json row = Json::array();
      for (std::size_t k = 0; k < sc.N; ++k) row.push_back(sc.at(i, j, k));
      plane.push_back(std::move(row));
    }
    tensor.push_back(std::move(plane));
  }
  return tensor;
}

inline std::string t_matrices_to_csv(const TMatrixFamily& fam) {
  std::string out;
  for (std::size_t i = 0; i < fam.t.size(); ++i) {
    out += "T_" + std::to_string(i + 1) + "\n";
    const auto& m = fam.t[i];
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        if (c) out += ",";
        out += format_fixed(m(r, c));
      }
      out += "\n";
    }
  }
  return out;
}

}  // namespace superfourier
