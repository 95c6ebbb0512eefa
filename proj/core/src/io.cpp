#include "lamina/io.hpp"

#include <charconv>
#include <optional>
#include <sstream>

namespace lamina {

namespace {

std::vector<std::string> words(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

struct Line {
    int number;
    std::vector<std::string> words;
    std::string comment;  // text after '#', trimmed
};

std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> out;
    int n = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++n;
        std::string comment;
        if (auto h = line.find('#'); h != std::string_view::npos) {
            auto c = words(line.substr(h + 1));
            for (std::size_t i = 0; i < c.size(); ++i) comment += (i ? " " : "") + c[i];
            line = line.substr(0, h);
        }
        auto w = words(line);
        if (!w.empty()) out.push_back({n, std::move(w), std::move(comment)});
        if (end == text.size()) break;
    }
    return out;
}

[[noreturn]] void fail_at(int line, const std::string& msg) {
    throw Error("line " + std::to_string(line) + ": " + msg);
}

int parse_int(const std::string& s, int line) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) fail_at(line, "expected an integer, got '" + s + "'");
    return v;
}

template <class F>
auto at_line(int line, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const Error& e) {
        fail_at(line, e.what());
    }
}

Degree header(const std::vector<Line>& lines, const std::string& keyword) {
    if (lines.empty()) throw Error("line 1: missing header '" + keyword + " d'");
    const auto& h = lines.front();
    if (h.words.size() < 2 || h.words[0] != keyword) fail_at(h.number, "expected header '" + keyword + " d'");
    return at_line(h.number, [&] { return Degree(parse_int(h.words[1], h.number)); });
}

Chord chord_from(const Line& l, std::size_t first) {
    if (l.words.size() != first + 2) fail_at(l.number, "expected two angles");
    return at_line(l.number, [&] {
        Chord c(parse_angle(l.words[first]), parse_angle(l.words[first + 1]));
        if (c.degenerate()) throw Error("degenerate chord " + c.str());
        return c;
    });
}

std::string chord_line(const Chord& c) { return c.lo().str() + " " + c.hi().str(); }

}  // namespace

Chord parse_chord(std::string_view text) {
    auto w = words(text);
    if (w.size() != 2) throw Error("chord literal needs two angles");
    return Chord(parse_angle(w[0]), parse_angle(w[1]));
}

Polygon parse_polygon(std::string_view text) {
    auto w = words(text);
    if (w.empty()) throw Error("empty polygon literal");
    std::vector<Angle> v;
    for (const auto& s : w) v.push_back(parse_angle(s));
    return Polygon(std::move(v));
}

std::string format_polygon(const Polygon& p) {
    std::string out;
    for (const auto& a : p.vertices()) out += (out.empty() ? "" : " ") + a.str();
    return out;
}

Lamination parse_lamination(std::string_view text) {
    auto lines = content_lines(text);
    Degree d = header(lines, "degree");
    const auto& h = lines.front();
    std::optional<int> depth;
    if (h.words.size() == 4 && h.words[2] == "depth")
        depth = parse_int(h.words[3], h.number);
    else if (h.words.size() != 2)
        fail_at(h.number, "expected 'degree d [depth n]'");
    Lamination lam(d);
    lam.set_depth_truncation(depth);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        Chord c = chord_from(lines[i], 0);
        lam.insert(c);
        auto cw = words(lines[i].comment);
        if (cw.size() == 2 && cw[0] == "gen") lam.set_generation(c, parse_int(cw[1], lines[i].number));
    }
    return lam;
}

std::string serialize_lamination(const Lamination& lam) {
    std::string out = "degree " + std::to_string(lam.degree().value());
    if (auto d = lam.depth_truncation()) out += " depth " + std::to_string(*d);
    out += "\n";
    for (const auto& c : lam.leaves()) {
        out += chord_line(c);
        if (lam.has_generation_data()) out += " # gen " + std::to_string(lam.generation(c));
        out += "\n";
    }
    return out;
}

FullCriticalCollection parse_critical(std::string_view text) {
    auto lines = content_lines(text);
    Degree d = header(lines, "critical");
    if (lines.front().words.size() != 2) fail_at(lines.front().number, "expected 'critical d'");
    std::vector<Chord> chords;
    for (std::size_t i = 1; i < lines.size(); ++i) chords.push_back(chord_from(lines[i], 0));
    return FullCriticalCollection(d, std::move(chords));
}

std::string serialize_critical(const FullCriticalCollection& fcc) {
    std::string out = "critical " + std::to_string(fcc.degree().value()) + "\n";
    for (const auto& c : fcc.chords()) out += chord_line(c) + "\n";
    return out;
}

QCPortrait parse_portrait(std::string_view text) {
    auto lines = content_lines(text);
    QCPortrait p{header(lines, "qcportrait"), {}};
    if (lines.front().words.size() != 2) fail_at(lines.front().number, "expected 'qcportrait d'");
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& l = lines[i];
        if (l.words[0] == "leaf") {
            p.items.push_back({Polygon(chord_from(l, 1))});
        } else if (l.words[0] == "quad") {
            if (l.words.size() != 5) fail_at(l.number, "quad needs four angles");
            std::vector<Angle> v;
            for (int k = 1; k <= 4; ++k) v.push_back(at_line(l.number, [&] { return parse_angle(l.words[k]); }));
            Polygon q(std::move(v));
            if (q.size() != 4) fail_at(l.number, "quad vertices must be distinct");
            p.items.push_back({std::move(q)});
        } else {
            fail_at(l.number, "expected 'quad' or 'leaf'");
        }
    }
    if (static_cast<int>(p.items.size()) != p.degree.value() - 1)
        throw Error("portrait of degree " + std::to_string(p.degree.value()) + " needs " +
                    std::to_string(p.degree.value() - 1) + " critical sets");
    return p;
}

std::string serialize_portrait(const QCPortrait& p) {
    std::string out = "qcportrait " + std::to_string(p.degree.value()) + "\n";
    for (const auto& it : p.items) out += (it.is_quad() ? "quad " : "leaf ") + format_polygon(it.set) + "\n";
    return out;
}

CoTag parse_tag(std::string_view text) {
    auto lines = content_lines(text);
    if (lines.size() != 2) throw Error("tag file needs exactly two polygon lines");
    auto poly = [](const Line& l) {
        return at_line(l.number, [&] {
            std::string joined;
            for (const auto& w : l.words) joined += w + " ";
            return parse_polygon(joined);
        });
    };
    return CoTag{poly(lines[0]), poly(lines[1])};
}

std::string serialize_tag(const CoTag& t) { return format_polygon(t.first) + "\n" + format_polygon(t.second) + "\n"; }

}  // namespace lamina
