#include "multiseg/json_io.hpp"

#include <cctype>

namespace multiseg {

using nlohmann::json;

json to_json(const Segment& s) { return json::array({s.a, s.b}); }

json to_json(const Multisegment& m) {
    json out = json::array();
    for (const Segment& s : m.segments()) out.push_back(to_json(s));
    return out;
}

json to_json(const RemovalOutcome& o) {
    if (o.is_infinity()) return json("infinity");
    return to_json(o.value());
}

Segment segment_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() ||
        !j[1].is_number_integer())
        throw std::invalid_argument("expected a segment of the form [a,b], got " + j.dump());
    int a = j[0].get<int>(), b = j[1].get<int>();
    if (b < a)
        throw std::invalid_argument("segment " + j.dump() + ": end before start");
    return Segment(a, b);
}

Multisegment multisegment_from_json(const json& j) {
    if (!j.is_array())
        throw std::invalid_argument("expected a list of segments, got " + j.dump());
    std::vector<Segment> segs;
    segs.reserve(j.size());
    for (const auto& e : j) segs.push_back(segment_from_json(e));
    return Multisegment(std::move(segs));
}

RemovalOutcome outcome_from_json(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "infinity") return RemovalOutcome::infinity();
        throw std::invalid_argument("expected \"infinity\" or a multisegment, got " + j.dump());
    }
    return multisegment_from_json(j);
}

namespace {

std::string trimmed(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

} // namespace

Segment parse_segment(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw std::invalid_argument("malformed segment: " + text);
    return segment_from_json(j);
}

Multisegment parse_multisegment(const std::string& text) {
    std::string t = trimmed(text);
    if (t.empty()) throw std::invalid_argument("empty multisegment text");

    json j = json::parse(t, nullptr, false);
    if (!j.is_discarded()) {
        if (j.is_array() && j.size() == 2 && j[0].is_number_integer() &&
            j[1].is_number_integer())
            return Multisegment({segment_from_json(j)}); // lone "[a,b]"
        return multisegment_from_json(j);
    }

    // compact notation "[0,3]+[1,2]+[1,2]"
    std::vector<Segment> segs;
    std::size_t pos = 0;
    while (pos <= t.size()) {
        std::size_t plus = t.find('+', pos);
        std::string term = trimmed(t.substr(pos, plus == std::string::npos ? plus : plus - pos));
        segs.push_back(parse_segment(term));
        if (plus == std::string::npos) break;
        pos = plus + 1;
    }
    return Multisegment(std::move(segs));
}

} // namespace multiseg
