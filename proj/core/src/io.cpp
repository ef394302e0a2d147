#include "hypertrees/io.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hypertrees::io {

using nlohmann::json;

namespace {

json complex_json(const Complex& x) {
  json faces = json::array();
  for (const Face& f : x.faces()) faces.push_back(f.vertices());
  return json{{"n", x.n()}, {"k", x.k()}, {"faces", std::move(faces)}};
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string complex_record(const Complex& x) { return complex_json(x).dump(); }

std::string tree_record(const Complex& x, const Integer& torsion) {
  json j = complex_json(x);
  j["torsion"] = torsion.str();
  return j.dump();
}

std::string sample_record(const measure::SampleRecord& rec) {
  json j = complex_json(rec.complex);
  j["torsion"] = rec.torsion.str();
  j["seed"] = rec.seed;
  j["draw"] = rec.draw_index;
  j["method"] = measure::method_name(rec.method);
  return j.dump();
}

Complex parse_complex_record(const std::string& line) {
  const json j = json::parse(line);
  const int n = j.at("n").get<int>();
  const int k = j.at("k").get<int>();
  std::vector<Face> faces;
  for (const auto& arr : j.at("faces")) faces.push_back(make_face(arr.get<std::vector<int>>()));
  return Complex(n, k, std::move(faces));
}

void write_edge_list(std::ostream& out, const spectral::Graph& g) {
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

spectral::Graph read_edge_list(std::istream& in) {
  std::vector<std::pair<int, int>> edges;
  int max_vertex = 0;
  int u, v;
  while (in >> u >> v) {
    edges.emplace_back(u, v);
    max_vertex = std::max({max_vertex, u, v});
  }
  return spectral::Graph(max_vertex, edges);
}

std::string sweep_csv_header(bool er_generator) {
  return er_generator ? "n,k,p,seed,lambda2,min_deg,avg_deg,connected,residual"
                      : "n,k,m,seed,lambda2,min_deg,avg_deg,connected,residual";
}

std::string sweep_csv_row(const spectral::SweepRow& row, bool er_generator) {
  std::ostringstream out;
  out << row.n << ',' << row.k << ',';
  if (er_generator)
    out << format_double(row.p);
  else
    out << row.m;
  out << ',' << row.seed << ',' << format_double(row.lambda2) << ',' << row.min_deg << ','
      << format_double(row.avg_deg) << ',' << (row.connected ? 1 : 0) << ','
      << format_double(row.residual);
  return out.str();
}

std::string verify_record(const VerifyRecord& rec) {
  json j{{"identity", rec.identity}, {"n", rec.n},       {"k", rec.k},
         {"method", rec.method},     {"pass", rec.pass}, {"detail", rec.detail}};
  if (rec.j >= 0) j["j"] = rec.j;
  return j.dump();
}

}  // namespace hypertrees::io
