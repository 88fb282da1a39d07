#include "diffpow/staircase.hpp"

#include <algorithm>
#include <sstream>

namespace diffpow {

namespace {

constexpr std::string_view kOverlayGlyphs = "23456789abcdefghij";

char glyph_for(const StaircaseRequest& request, const ExponentVector& point) {
  // innermost (last) overlay containing the point wins
  for (std::size_t k = request.overlays.size(); k-- > 0;) {
    if (request.overlays[k].second.contains(point))
      return kOverlayGlyphs[std::min(k, kOverlayGlyphs.size() - 1)];
  }
  if (request.base.contains(point)) return '#';
  return '.';
}

std::string ascii_render(const StaircaseRequest& request) {
  const std::int64_t w = request.extent[0], h = request.extent[1];
  const int ywidth = static_cast<int>(std::to_string(h).size());
  const int xwidth = static_cast<int>(std::to_string(w).size());
  std::ostringstream out;
  out << std::string(static_cast<std::size_t>(ywidth), ' ') << " y\n";
  for (std::int64_t y = h; y >= 0; --y) {
    std::string label = std::to_string(y);
    out << std::string(static_cast<std::size_t>(ywidth) - label.size(), ' ') << label << " |";
    for (std::int64_t x = 0; x <= w; ++x) {
      const std::string cell(1, glyph_for(request, ExponentVector({x, y})));
      out << ' ' << cell << std::string(static_cast<std::size_t>(xwidth) - 1, ' ');
    }
    out << '\n';
  }
  out << std::string(static_cast<std::size_t>(ywidth), ' ') << " +"
      << std::string(static_cast<std::size_t>((w + 1) * (xwidth + 1)), '-') << "\n";
  out << std::string(static_cast<std::size_t>(ywidth), ' ') << "   ";
  for (std::int64_t x = 0; x <= w; ++x) {
    std::string label = std::to_string(x);
    out << label << std::string(static_cast<std::size_t>(xwidth + 1) - label.size(), ' ');
  }
  out << " x\n";

  const NamingConvention conv = default_convention(2);
  out << "legend: # " << print_ideal(request.base, conv) << "\n";
  for (std::size_t k = 0; k < request.overlays.size(); ++k)
    out << "        " << kOverlayGlyphs[std::min(k, kOverlayGlyphs.size() - 1)] << ' '
        << request.overlays[k].first << ' '
        << print_ideal(request.overlays[k].second, conv) << "\n";
  return out.str();
}

std::string svg_render(const StaircaseRequest& request) {
  const std::int64_t w = request.extent[0], h = request.extent[1];
  constexpr int cell = 20, margin = 40;
  const std::int64_t width = margin * 2 + (w + 1) * cell;
  const std::int64_t height = margin * 2 + (h + 1) * cell;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
      << "\" height=\"" << height << "\">\n";
  out << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";

  static const char* kColors[] = {"#88aadd", "#dd8888", "#88cc88", "#ccaa55",
                                  "#aa88cc", "#77bbbb"};
  auto region = [&](const MonomialIdeal& ideal, const char* color) {
    out << "<g fill=\"" << color << "\" fill-opacity=\"0.45\" stroke=\"" << color
        << "\" stroke-width=\"1\">\n";
    for (std::int64_t y = 0; y <= h; ++y)
      for (std::int64_t x = 0; x <= w; ++x)
        if (ideal.contains(ExponentVector({x, y})))
          out << "<rect x=\"" << margin + x * cell << "\" y=\"" << margin + (h - y) * cell
              << "\" width=\"" << cell << "\" height=\"" << cell << "\"/>\n";
    out << "</g>\n";
  };
  region(request.base, kColors[0]);
  for (std::size_t k = 0; k < request.overlays.size(); ++k)
    region(request.overlays[k].second, kColors[(k + 1) % 6]);

  const NamingConvention conv = default_convention(2);
  out << "<text x=\"" << margin << "\" y=\"" << margin - 20
      << "\" font-family=\"monospace\" font-size=\"12\">" << print_ideal(request.base, conv);
  for (const auto& [label, ideal] : request.overlays)
    out << "; " << label << " " << print_ideal(ideal, conv);
  out << "</text>\n";
  out << "<text x=\"" << width - margin + 8 << "\" y=\"" << height - margin + 4
      << "\" font-family=\"monospace\" font-size=\"12\">x</text>\n";
  out << "<text x=\"" << margin - 16 << "\" y=\"" << margin - 4
      << "\" font-family=\"monospace\" font-size=\"12\">y</text>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace

ExponentVector staircase_required_extent(const StaircaseRequest& request) {
  ExponentVector ext = request.base.generator_extent();
  for (const auto& [label, ideal] : request.overlays)
    ext = component_max(ext, ideal.generator_extent());
  return ext;
}

std::string render_staircase(const StaircaseRequest& request) {
  if (request.base.dim() != 2)
    throw PreconditionError("staircase rendering is only available for two variables");
  for (const auto& [label, ideal] : request.overlays)
    if (ideal.dim() != 2) throw DimensionMismatchError("overlay dimension differs");
  if (request.extent.dim() != 2) throw DimensionMismatchError("extent must be 2-dimensional");

  const ExponentVector required = staircase_required_extent(request);
  if (!required.divides(request.extent))
    throw PreconditionError("extent too small; need at least (" +
                            std::to_string(required[0]) + "," + std::to_string(required[1]) +
                            ")");
  return request.format == StaircaseRequest::Format::Ascii ? ascii_render(request)
                                                           : svg_render(request);
}

}  // namespace diffpow
