#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mjt/core.hpp"
#include "mjt/tau1_solver.hpp"

namespace mjt {

inline constexpr std::string_view kCsvHeader = "t,tau,x,y,vx,vy,ax,ay,jx,jy";
inline constexpr std::array<std::string_view, 10> kRecordKeys{"t",  "tau", "x",  "y",  "vx",
                                                              "vy", "ax",  "ay", "jx", "jy"};

/// A sample flattened to the ten export columns, in header order.
struct ExportRecord {
  std::array<double, 10> values{};

  static ExportRecord from_sample(const TrajectorySample& s);
  double operator[](std::size_t i) const { return values[i]; }
};

/// %.17g rendering used for CSV cells.
std::string format_csv_number(double v);

/// Header line plus one line per sample, '\n' terminated. Throws EmptySamples.
void write_csv(std::span<const TrajectorySample> samples, std::ostream& out);
std::vector<ExportRecord> read_csv(std::istream& in);

/// What a JSON export echoes besides the samples. `solution` is set for
/// curved plans only.
struct ExportMetadata {
  MotionSpec spec;
  std::optional<ViaSolution> solution;
};

/// One document: spec, then tau1 and constants (curved only), then samples.
/// Throws EmptySamples.
void write_json(std::span<const TrajectorySample> samples, const ExportMetadata& meta,
                std::ostream& out);
std::vector<ExportRecord> read_json_samples(std::istream& in);

}  // namespace mjt
