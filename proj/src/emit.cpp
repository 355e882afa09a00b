#include "cubres/emit.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace cubres {

std::string to_hex(Rgb c) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c.r, c.g, c.b);
  return buf;
}

void ColorScheme::validate() const {
  if (zero_color == negative_color || zero_color == positive_color || negative_color == positive_color) {
    throw std::invalid_argument("color scheme needs three distinct colors");
  }
}

Rgb ColorScheme::color_for(SignClass s) const {
  switch (s) {
    case SignClass::Zero: return zero_color;
    case SignClass::Negative: return negative_color;
    case SignClass::Positive: return positive_color;
  }
  return zero_color;
}

std::string emit_csv(const DeterminantTable& table) {
  std::string out = "n\\c";
  for (std::int64_t c = table.c_range().lo; c <= table.c_range().hi; ++c) {
    out += ',';
    out += std::to_string(c);
  }
  out += '\n';
  for (std::int64_t n = table.n_range().lo; n <= table.n_range().hi; ++n) {
    out += std::to_string(n);
    for (std::int64_t c = table.c_range().lo; c <= table.c_range().hi; ++c) {
      out += ',';
      out += table.cell(n, c).get_str();
    }
    out += '\n';
  }
  return out;
}

namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    fields.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return fields;
}

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad integer in CSV: '" + std::string(s) + "'");
  }
  return v;
}

ExactInt parse_exact(std::string_view s) {
  ExactInt v;
  if (s.empty() || v.set_str(std::string(s), 10) != 0) {
    throw std::invalid_argument("bad determinant in CSV: '" + std::string(s) + "'");
  }
  return v;
}

std::size_t max_width(const DeterminantTable& table) {
  std::size_t w = 3;  // "n\c"
  for (const ExactInt& v : table.cells()) w = std::max(w, v.get_str().size());
  for (const std::int64_t v : {table.c_range().lo, table.c_range().hi, table.n_range().hi})
    w = std::max(w, std::to_string(v).size());
  return w;
}

std::string pad_left(const std::string& s, std::size_t w) {
  return s.size() >= w ? s : std::string(w - s.size(), ' ') + s;
}

template <class CellFn>
std::string grid(const DeterminantTable& table, CellFn cell_text) {
  const std::size_t w = max_width(table);
  std::string out = pad_left("n\\c", w);
  for (std::int64_t c = table.c_range().lo; c <= table.c_range().hi; ++c) {
    out += ' ';
    out += pad_left(std::to_string(c), w);
  }
  out += '\n';
  for (std::int64_t n = table.n_range().lo; n <= table.n_range().hi; ++n) {
    out += pad_left(std::to_string(n), w);
    for (std::int64_t c = table.c_range().lo; c <= table.c_range().hi; ++c) {
      out += ' ';
      out += cell_text(table.cell(n, c), w);
    }
    out += '\n';
  }
  return out;
}

char sign_glyph(SignClass s) {
  switch (s) {
    case SignClass::Zero: return '0';
    case SignClass::Negative: return '-';
    case SignClass::Positive: return '+';
  }
  return '?';
}

// Black text on bright backgrounds.
std::string sgr_background(Rgb c) {
  return "\x1b[30;48;2;" + std::to_string(c.r) + ';' + std::to_string(c.g) + ';' + std::to_string(c.b) + 'm';
}

}  // namespace

ParsedCsv parse_csv(std::string_view text) {
  ParsedCsv parsed;
  bool header = true;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) throw std::invalid_argument("CSV line is not newline-terminated");
    const auto fields = split(text.substr(start, end - start), ',');
    start = end + 1;
    if (header) {
      if (fields.front() != "n\\c") throw std::invalid_argument("CSV header must start with n\\c");
      for (std::size_t k = 1; k < fields.size(); ++k) parsed.c_values.push_back(parse_int(fields[k]));
      header = false;
      continue;
    }
    if (fields.size() != parsed.c_values.size() + 1) throw std::invalid_argument("CSV row width mismatch");
    parsed.n_values.push_back(parse_int(fields.front()));
    auto& row = parsed.rows.emplace_back();
    for (std::size_t k = 1; k < fields.size(); ++k) row.push_back(parse_exact(fields[k]));
  }
  if (header) throw std::invalid_argument("empty CSV");
  return parsed;
}

std::string emit_ansi(const DeterminantTable& table, const ColorScheme& scheme, bool color) {
  scheme.validate();
  if (!color) {
    return grid(table, [](const ExactInt& v, std::size_t w) {
      return pad_left(std::string(1, sign_glyph(sign_classify(v))), w);
    });
  }
  return grid(table, [&](const ExactInt& v, std::size_t w) {
    return sgr_background(scheme.color_for(sign_classify(v))) + pad_left(v.get_str(), w) + "\x1b[0m";
  });
}

std::string emit_text(const DeterminantTable& table) {
  return grid(table, [](const ExactInt& v, std::size_t w) { return pad_left(v.get_str(), w); });
}

std::string emit_svg(const DeterminantTable& table, const ColorScheme& scheme, int cell_px) {
  if (cell_px < 1) throw std::invalid_argument("cell size must be at least 1 pixel");
  scheme.validate();
  const std::int64_t cols = static_cast<std::int64_t>(table.c_range().size());
  const std::int64_t rows = static_cast<std::int64_t>(table.n_range().size());
  const std::int64_t margin = 2 * static_cast<std::int64_t>(cell_px);
  const std::int64_t width = margin + cols * cell_px;
  const std::int64_t height = margin + rows * cell_px;
  const int font_px = std::max(1, cell_px / 2);

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "<title>p=" << table.prime().value() << " family=" << table.family().name() << "</title>\n"
      << "<g font-family=\"monospace\" font-size=\"" << font_px << "\" text-anchor=\"middle\">\n";
  for (std::int64_t k = 0; k < cols; ++k) {
    out << "<text x=\"" << margin + k * cell_px + cell_px / 2 << "\" y=\"" << margin - cell_px / 4 << "\">"
        << table.c_range().lo + k << "</text>\n";
  }
  for (std::int64_t k = 0; k < rows; ++k) {
    out << "<text x=\"" << margin / 2 << "\" y=\"" << margin + k * cell_px + (3 * cell_px) / 4 << "\">"
        << table.n_range().lo + k << "</text>\n";
  }
  out << "</g>\n";
  for (std::int64_t r = 0; r < rows; ++r) {
    const std::int64_t n = table.n_range().lo + r;
    for (std::int64_t k = 0; k < cols; ++k) {
      const std::int64_t c = table.c_range().lo + k;
      const ExactInt& v = table.cell(n, c);
      out << "<rect x=\"" << margin + k * cell_px << "\" y=\"" << margin + r * cell_px << "\" width=\""
          << cell_px << "\" height=\"" << cell_px << "\" fill=\"" << to_hex(scheme.color_for(sign_classify(v)))
          << "\"><title>n=" << n << " c=" << c << " det=" << v.get_str() << "</title></rect>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace cubres
