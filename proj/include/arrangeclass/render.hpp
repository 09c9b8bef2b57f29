#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "arrangeclass/core.hpp"

namespace arrangeclass {

enum class RenderKind { Wiring, Multipoint };
RenderKind parse_render_kind(std::string_view text);

/// Wire label at each height before the first column and after every
/// column: entry k lists, bottom to top, which wire occupies each position.
std::vector<std::vector<int>> wiring_columns(const LefschetzList& list);

/// Standalone SVG documents. Wiring mode draws one polyline per wire with
/// evenly spaced intersection columns; multipoint mode draws the graph of
/// multiple points with multiplicity labels.
std::string render_wiring_svg(const LefschetzList& list);
std::string render_multipoint_svg(const LefschetzList& list);
std::string render_svg(const LefschetzList& list, RenderKind kind);

}  // namespace arrangeclass
