#include "multiseg/render.hpp"

#include <algorithm>

namespace multiseg {

namespace {

char marker_char(const std::string& tag) {
    if (tag == "removed") return '*';
    if (tag == "first") return '#';
    return tag.empty() ? '?' : tag[0];
}

} // namespace

std::string render_diagram(const Multisegment& m, const std::vector<DiagramMark>& marks) {
    if (m.empty()) return "";

    int lo = m.segments().front().a, hi = m.segments().front().b;
    for (const Segment& s : m.segments()) {
        lo = std::min(lo, s.a);
        hi = std::max(hi, s.b);
    }

    std::size_t digits = 1;
    for (int c = lo; c <= hi; ++c) digits = std::max(digits, std::to_string(c).size());
    const std::size_t width = digits + (marks.empty() ? 0 : 2);

    // each mark claims one row, so copies can be marked individually
    std::vector<bool> claimed(marks.size(), false);

    std::string out;
    for (const Segment& seg : m.segments()) {
        std::vector<std::pair<int, char>> row_marks; // (point, marker)
        for (std::size_t k = 0; k < marks.size(); ++k) {
            if (claimed[k] || marks[k].segment != seg) continue;
            claimed[k] = true;
            for (int p : marks[k].points) row_marks.emplace_back(p, marker_char(marks[k].tag));
            break;
        }

        std::string row;
        for (int c = lo; c <= hi; ++c) {
            bool covered = seg.contains(c);
            if (!covered) {
                row.append(width, ' ');
            } else {
                std::string text = std::to_string(c);
                for (const auto& [p, mk] : row_marks)
                    if (p == c) text = std::string(1, mk) + text + mk;
                std::size_t pad = width - std::min(width, text.size());
                row.append(pad, c > seg.a ? '-' : ' ');
                row += text;
            }
            if (c < hi) row += (covered && seg.contains(c + 1)) ? '-' : ' ';
        }
        while (!row.empty() && row.back() == ' ') row.pop_back();
        out += row;
        out += '\n';
    }
    return out;
}

} // namespace multiseg
