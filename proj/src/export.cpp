#include "mjt/export.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "mjt/error.hpp"

namespace mjt {

ExportRecord ExportRecord::from_sample(const TrajectorySample& s) {
  return {{s.t, s.tau, s.position.x, s.position.y, s.velocity.x, s.velocity.y, s.acceleration.x,
           s.acceleration.y, s.jerk.x, s.jerk.y}};
}

std::string format_csv_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(std::span<const TrajectorySample> samples, std::ostream& out) {
  if (samples.empty()) throw Error(ErrorCode::EmptySamples, "nothing to export");
  out << kCsvHeader << '\n';
  for (const TrajectorySample& s : samples) {
    const ExportRecord r = ExportRecord::from_sample(s);
    for (std::size_t i = 0; i < r.values.size(); ++i) {
      if (i > 0) out << ',';
      out << format_csv_number(r[i]);
    }
    out << '\n';
  }
}

std::vector<ExportRecord> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw Error(ErrorCode::Io, "missing or unexpected CSV header");
  }
  std::vector<ExportRecord> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ExportRecord r;
    std::istringstream cells(line);
    std::string cell;
    std::size_t i = 0;
    for (; i < r.values.size() && std::getline(cells, cell, ','); ++i) {
      r.values[i] = std::stod(cell);
    }
    if (i != r.values.size()) throw Error(ErrorCode::Io, "short CSV row: " + line);
    out.push_back(r);
  }
  return out;
}

void write_json(std::span<const TrajectorySample> samples, const ExportMetadata& meta,
                std::ostream& out) {
  using nlohmann::ordered_json;
  if (samples.empty()) throw Error(ErrorCode::EmptySamples, "nothing to export");

  ordered_json spec;
  spec["x0"] = meta.spec.start.x;
  spec["y0"] = meta.spec.start.y;
  spec["xf"] = meta.spec.end.x;
  spec["yf"] = meta.spec.end.y;
  if (meta.solution) {
    spec["x1"] = meta.solution->spec.via.x;
    spec["y1"] = meta.solution->spec.via.y;
  }
  spec["tf"] = meta.spec.duration;

  ordered_json doc;
  doc["spec"] = std::move(spec);
  if (meta.solution) {
    const ViaConstants& k = meta.solution->constants;
    doc["tau1"] = meta.solution->tau1;
    doc["constants"] = ordered_json{{"c1", k.c1}, {"c2", k.c2}, {"pi1", k.pi1}, {"pi2", k.pi2}};
  }
  ordered_json rows = ordered_json::array();
  for (const TrajectorySample& s : samples) {
    const ExportRecord r = ExportRecord::from_sample(s);
    ordered_json row;
    for (std::size_t i = 0; i < kRecordKeys.size(); ++i) row[std::string(kRecordKeys[i])] = r[i];
    rows.push_back(std::move(row));
  }
  doc["samples"] = std::move(rows);
  out << doc.dump(2) << '\n';
}

std::vector<ExportRecord> read_json_samples(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Io, e.what());
  }
  std::vector<ExportRecord> out;
  for (const auto& row : doc.at("samples")) {
    ExportRecord r;
    for (std::size_t i = 0; i < kRecordKeys.size(); ++i) {
      r.values[i] = row.at(std::string(kRecordKeys[i])).get<double>();
    }
    out.push_back(r);
  }
  return out;
}

}  // namespace mjt
