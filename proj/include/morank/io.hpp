#pragma once

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "morank/pareto.hpp"
#include "morank/problems.hpp"

namespace morank {

/// Shortest decimal form that round-trips the exact double.
inline std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  double back = 0.0;
  std::sscanf(buf, "%lf", &back);
  if (back == x) {
    for (int prec = 1; prec < 17; ++prec) {
      char shorter[32];
      std::snprintf(shorter, sizeof shorter, "%.*g", prec, x);
      std::sscanf(shorter, "%lf", &back);
      if (back == x) return shorter;
    }
  }
  return buf;
}

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Point-set CSV: header f1..fk, one vector per row.
inline void write_point_csv(std::ostream& os,
                            const std::vector<ObjectiveVector>& points) {
  if (points.empty()) throw std::invalid_argument("no points to write");
  const std::size_t k = points.front().size();
  for (std::size_t o = 0; o < k; ++o) {
    os << (o ? "," : "") << "f" << (o + 1);
  }
  os << "\n";
  for (const auto& v : points) {
    for (std::size_t o = 0; o < k; ++o) {
      os << (o ? "," : "") << format_double(v[o]);
    }
    os << "\n";
  }
}

inline std::vector<ObjectiveVector> read_point_csv(std::istream& is) {
  std::string line;
  int lineno = 0;
  std::size_t k = 0;
  std::vector<ObjectiveVector> points;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ls(line);
    while (std::getline(ls, field, ',')) fields.push_back(field);
    if (lineno == 1) {
      k = fields.size();  // header row carries the dimension
      continue;
    }
    if (fields.size() != k) {
      throw ParseError("line " + std::to_string(lineno) + ": expected " +
                       std::to_string(k) + " fields, got " +
                       std::to_string(fields.size()));
    }
    ObjectiveVector v;
    for (const auto& f : fields) {
      std::size_t pos = 0;
      double x;
      try {
        x = std::stod(f, &pos);
      } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(lineno) +
                         ": bad number '" + f + "'");
      }
      if (pos != f.size()) {
        throw ParseError("line " + std::to_string(lineno) +
                         ": bad number '" + f + "'");
      }
      v.push_back(x);
    }
    points.push_back(std::move(v));
  }
  if (points.empty()) throw ParseError("no data rows");
  return points;
}

// Instance file schema, version 1. Self-describing: parameters and the seed
// come first so any file can be regenerated from its own header.
//
//   morank-instance 1
//   family tsp|jsp
//   cities|jobs N
//   objectives K
//   pc X
//   seed S
//   matrix <o>        (tsp: k blocks of n rows of n values)
//   job-table         (jsp: n rows of "proc due customer")

inline void write_instance(std::ostream& os, const ProblemInstance& p) {
  os << "morank-instance 1\n";
  if (const auto* tsp = std::get_if<TspInstance>(&p)) {
    os << "family tsp\n"
       << "cities " << tsp->n_cities << "\n"
       << "objectives " << tsp->k << "\n"
       << "pc " << format_double(tsp->tsp_pc) << "\n"
       << "seed " << tsp->seed << "\n";
    for (int o = 0; o < tsp->k; ++o) {
      os << "matrix " << (o + 1) << "\n";
      for (int a = 0; a < tsp->n_cities; ++a) {
        for (int b = 0; b < tsp->n_cities; ++b) {
          os << (b ? " " : "") << format_double(tsp->distance(o, a, b));
        }
        os << "\n";
      }
    }
  } else {
    const auto& jsp = std::get<JspInstance>(p);
    os << "family jsp\n"
       << "jobs " << jsp.n_jobs << "\n"
       << "objectives " << jsp.k << "\n"
       << "pc " << format_double(jsp.jsp_pc) << "\n"
       << "seed " << jsp.seed << "\n"
       << "job-table\n";
    for (int j = 0; j < jsp.n_jobs; ++j) {
      os << jsp.proc_time[j] << " " << format_double(jsp.due_date[j]) << " "
         << jsp.customer[j] << "\n";
    }
  }
}

namespace detail {

inline std::string expect_keyword(std::istream& is, const std::string& kw) {
  std::string word;
  if (!(is >> word) || word != kw) {
    throw ParseError("instance file: expected '" + kw + "', got '" + word + "'");
  }
  std::string value;
  if (!(is >> value)) throw ParseError("instance file: missing value for " + kw);
  return value;
}

}  // namespace detail

inline ProblemInstance read_instance(std::istream& is) {
  std::string magic, version;
  if (!(is >> magic >> version) || magic != "morank-instance" || version != "1") {
    throw ParseError("not a morank-instance v1 file");
  }
  const std::string family = detail::expect_keyword(is, "family");
  if (family == "tsp") {
    TspInstance inst;
    inst.n_cities = std::stoi(detail::expect_keyword(is, "cities"));
    inst.k = std::stoi(detail::expect_keyword(is, "objectives"));
    inst.tsp_pc = std::stod(detail::expect_keyword(is, "pc"));
    inst.seed = std::stoull(detail::expect_keyword(is, "seed"));
    inst.matrices.assign(
        inst.k, std::vector<double>(
                    static_cast<std::size_t>(inst.n_cities) * inst.n_cities));
    for (int o = 0; o < inst.k; ++o) {
      std::string kw;
      int idx;
      if (!(is >> kw >> idx) || kw != "matrix" || idx != o + 1) {
        throw ParseError("instance file: expected matrix " + std::to_string(o + 1));
      }
      for (auto& d : inst.matrices[o]) {
        if (!(is >> d)) throw ParseError("instance file: truncated matrix");
      }
    }
    return inst;
  }
  if (family == "jsp") {
    JspInstance inst;
    inst.n_jobs = std::stoi(detail::expect_keyword(is, "jobs"));
    inst.k = std::stoi(detail::expect_keyword(is, "objectives"));
    inst.jsp_pc = std::stod(detail::expect_keyword(is, "pc"));
    inst.seed = std::stoull(detail::expect_keyword(is, "seed"));
    std::string kw;
    if (!(is >> kw) || kw != "job-table") {
      throw ParseError("instance file: expected job-table");
    }
    inst.proc_time.resize(inst.n_jobs);
    inst.due_date.resize(inst.n_jobs);
    inst.customer.resize(inst.n_jobs);
    for (int j = 0; j < inst.n_jobs; ++j) {
      if (!(is >> inst.proc_time[j] >> inst.due_date[j] >> inst.customer[j])) {
        throw ParseError("instance file: truncated job table");
      }
    }
    return inst;
  }
  throw ParseError("unknown problem family: " + family);
}

}  // namespace morank
