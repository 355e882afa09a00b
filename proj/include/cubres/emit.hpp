#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cubres/table.hpp"

namespace cubres {

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;
  friend bool operator==(const Rgb&, const Rgb&) = default;
};

/// "#rrggbb"
std::string to_hex(Rgb c);

/// Cell colors by determinant sign. The default is blue for zero, orange
/// for negative and green for positive.
struct ColorScheme {
  Rgb zero_color{31, 119, 180};
  Rgb negative_color{255, 127, 14};
  Rgb positive_color{44, 160, 44};

  /// Throws std::invalid_argument unless the three colors are distinct.
  void validate() const;
  Rgb color_for(SignClass s) const;
};

/// Canonical interchange format:
///   n\c,<c_lo>,...,<c_hi>
///   <n>,<det>,...,<det>
/// one line per order, ascending, every line newline-terminated.
std::string emit_csv(const DeterminantTable& table);

struct ParsedCsv {
  std::vector<std::int64_t> c_values;
  std::vector<std::int64_t> n_values;
  std::vector<std::vector<ExactInt>> rows;
};

/// Reads text produced by emit_csv. Throws std::invalid_argument on
/// malformed input.
ParsedCsv parse_csv(std::string_view text);

/// Fixed-width grid. With color on, every cell gets an SGR truecolor
/// background; with color off each cell shows its sign glyph (0, -, +).
std::string emit_ansi(const DeterminantTable& table, const ColorScheme& scheme, bool color = true);

/// Plain fixed-width grid of exact values, no escapes.
std::string emit_text(const DeterminantTable& table);

/// SVG 1.1 heatmap: one <rect> per cell with a <title> holding the exact
/// value, n increasing downward and c increasing rightward.
std::string emit_svg(const DeterminantTable& table, const ColorScheme& scheme, int cell_px = 24);

}  // namespace cubres
