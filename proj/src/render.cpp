#include "negglue/render.hpp"

#include <algorithm>
#include <climits>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace ng {

RenderStyle::ColorBy parse_color_by(const std::string& s) {
    if (s == "tile") return RenderStyle::TileHash;
    if (s == "gadget") return RenderStyle::Gadget;
    if (s == "step") return RenderStyle::StepOrder;
    throw std::invalid_argument("unknown color scheme: " + s);
}

namespace {

uint32_t fnv(const std::string& s) {
    uint32_t h = 2166136261u;
    for (unsigned char c : s) h = (h ^ c) * 16777619u;
    return h;
}

// gadget name is the id up to the first separator
std::string gadget_of(const std::string& id) {
    auto k = id.find_first_of(":/@");
    return k == std::string::npos ? id : id.substr(0, k);
}

std::string hsl(int hue, int sat, int light) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "hsl(%d,%d%%,%d%%)", hue, sat, light);
    return buf;
}

std::string xml_escape(const std::string& s) {
    std::string o;
    for (char c : s) {
        switch (c) {
            case '&': o += "&amp;"; break;
            case '<': o += "&lt;"; break;
            case '>': o += "&gt;"; break;
            case '"': o += "&quot;"; break;
            default: o += c;
        }
    }
    return o;
}

}  // namespace

std::string render_svg(const TileSystem& S, const std::vector<Placement>& placements, const RenderStyle& style) {
    std::ostringstream o;
    const int c = style.cell;
    if (placements.empty()) {
        o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"0\" height=\"0\" viewBox=\"0 0 0 0\"></svg>\n";
        return o.str();
    }
    int x0 = INT_MAX, y0 = INT_MAX, x1 = INT_MIN, y1 = INT_MIN;
    for (auto& p : placements) {
        x0 = std::min(x0, p.x);
        x1 = std::max(x1, p.x);
        y0 = std::min(y0, p.y);
        y1 = std::max(y1, p.y);
    }
    int w = (x1 - x0 + 1) * c, h = (y1 - y0 + 1) * c;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << w
      << ' ' << h << "\">\n";
    size_t n = placements.size();
    for (size_t i = 0; i < n; ++i) {
        auto& p = placements[i];
        auto& t = S.tiles.at(p.tile);
        int px = (p.x - x0) * c, py = (y1 - p.y) * c;
        std::string fill;
        switch (style.colorBy) {
            case RenderStyle::TileHash: fill = hsl(int(fnv(t.id) % 360), 55, 70); break;
            case RenderStyle::Gadget: fill = hsl(int(fnv(gadget_of(t.id)) % 360), 55, 70); break;
            case RenderStyle::StepOrder: fill = hsl(int(240 - 240 * i / std::max<size_t>(1, n - 1)), 70, 60); break;
        }
        o << "<rect x=\"" << px << "\" y=\"" << py << "\" width=\"" << c << "\" height=\"" << c << "\" fill=\"" << fill
          << "\" stroke=\"#333\" stroke-width=\"0.5\"><title>" << xml_escape(t.id) << " (" << p.x << ',' << p.y
          << ")</title></rect>\n";
        for (int d = 0; d < 4; ++d) {
            auto& g = t.side[d];
            if (!g) continue;
            double mx = px + c / 2.0 + DX[d] * c / 2.0, my = py + c / 2.0 - DY[d] * c / 2.0;
            bool neg = g->strength < 0 || (S.negLabel && g->label == *S.negLabel);
            if (neg) {
                double q = c / 8.0;
                double cx = mx - DX[d] * q, cy = my + DY[d] * q;
                o << "<polygon class=\"neg\" points=\"" << cx - q << ',' << cy - q << ' ' << cx + q << ',' << cy - q << ' '
                  << cx + q << ',' << cy + q << ' ' << cx - q << ',' << cy + q
                  << "\" fill=\"#fff\" stroke=\"#000\" stroke-width=\"0.5\"/>\n";
            } else if (style.ticks) {
                double len = c / 6.0 * g->strength;
                double ix = mx - DX[d] * len, iy = my + DY[d] * len;
                o << "<line x1=\"" << mx << "\" y1=\"" << my << "\" x2=\"" << ix << "\" y2=\"" << iy
                  << "\" stroke=\"#000\" stroke-width=\"1\"/>\n";
            }
        }
    }
    o << "</svg>\n";
    return o.str();
}

}  // namespace ng
