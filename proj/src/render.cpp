#include "outext/render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace outext {

namespace {

// Map order is the canonical one (largest first part first); the tables are
// printed in ascending lexicographic order, which is its exact reverse.
template <typename Map>
std::vector<typename Map::const_iterator> reversed(const Map& m) {
    std::vector<typename Map::const_iterator> out;
    for (auto it = m.begin(); it != m.end(); ++it) out.push_back(it);
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace

std::string render_birep(const BiRep& b) {
    if (b.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it : reversed(b.coeffs())) {
        auto& [key, c] = *it;
        if (!first) out << " + ";
        first = false;
        if (c != 1) out << c;
        out << "(" << key.first.to_display() << " x " << key.second.to_display()
            << ")";
    }
    return out.str();
}

std::string render_birep_csv(const BiRep& b) {
    std::ostringstream out;
    for (auto it : reversed(b.coeffs())) {
        auto& [key, c] = *it;
        out << '"' << key.first.to_text() << "\",\"" << key.second.to_text()
            << "\"," << c << "\n";
    }
    return out.str();
}

std::string diagram_ascii(const E1Support& s) {
    std::ostringstream out;
    out << "e1 page nu=" << s.nu_size << " lambda=" << s.lambda_size << "\n";
    if (s.region.empty()) {
        out << "  (empty)\n";
        return out.str();
    }
    int p_min = s.region.begin()->first;
    int p_max = s.lambda_size;

    out << " q\\p |";
    for (int p = p_min; p <= p_max; ++p) {
        out << " ";
        if (p < 10) out << " ";
        out << p;
    }
    out << "\n";

    for (int q = -s.nu_size; q >= -s.lambda_size; --q) {
        std::ostringstream label;
        label << q;
        out << std::string(label.str().size() < 4 ? 4 - label.str().size() : 0, ' ')
            << label.str() << " |";
        for (int p = p_min; p <= p_max; ++p) {
            char c = '.';
            if (s.contains(p, q)) c = s.known_zero(p, q) ? 'o' : '#';
            out << "  " << c;
        }
        out << "  Ext^" << p_max + q << "\n";
    }
    return out.str();
}

std::string diagram_svg(const E1Support& s) {
    const int cell = 28, margin = 48;
    int p_min = s.region.empty() ? s.nu_size : s.region.begin()->first;
    int p_max = s.lambda_size;
    int cols = std::max(p_max - p_min + 1, 1);
    int rows = std::max(s.lambda_size - s.nu_size + 1, 1);
    int width = margin * 2 + cols * cell + 70;
    int height = margin * 2 + rows * cell;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\">\n";
    out << "  <text x=\"" << margin << "\" y=\"20\" font-family=\"monospace\">"
        << "E1 page nu=" << s.nu_size << " lambda=" << s.lambda_size
        << "</text>\n";
    for (int q = -s.nu_size; q >= -s.lambda_size; --q) {
        int row = -q - s.nu_size;
        int cy = margin + row * cell + cell / 2;
        out << "  <text x=\"8\" y=\"" << cy + 4
            << "\" font-family=\"monospace\" font-size=\"11\">q=" << q
            << "</text>\n";
        for (int p = p_min; p <= p_max; ++p) {
            if (!s.contains(p, q)) continue;
            int cx = margin + (p - p_min) * cell + cell / 2;
            if (s.known_zero(p, q)) {
                out << "  <circle cx=\"" << cx << "\" cy=\"" << cy
                    << "\" r=\"8\" fill=\"none\" stroke=\"black\"/>\n";
            } else {
                out << "  <rect x=\"" << cx - 8 << "\" y=\"" << cy - 8
                    << "\" width=\"16\" height=\"16\" fill=\"black\"/>\n";
            }
        }
        out << "  <text x=\"" << margin + cols * cell + 10 << "\" y=\"" << cy + 4
            << "\" font-family=\"monospace\" font-size=\"11\">Ext^" << p_max + q
            << "</text>\n";
    }
    for (int p = p_min; p <= p_max; ++p) {
        int cx = margin + (p - p_min) * cell + cell / 2;
        out << "  <text x=\"" << cx - 4 << "\" y=\"" << height - 12
            << "\" font-family=\"monospace\" font-size=\"11\">" << p
            << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace outext
