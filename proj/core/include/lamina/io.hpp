#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lamina/cotag.hpp"
#include "lamina/portrait.hpp"

namespace lamina {

// Text formats. Angles are "p/q"; '#' starts a comment; blank lines are
// skipped. Errors name the 1-based line.
//
//   lamination:  "degree d [depth n]" then one "a b" per leaf; a leaf may
//                carry a trailing "# gen k" giving its pullback step
//   critical:    "critical d" then d-1 chords
//   portrait:    "qcportrait d" then d-1 lines "quad a b c e" or "leaf a b"
//   tag:         two polygon literals, one per line

Chord parse_chord(std::string_view text);
Polygon parse_polygon(std::string_view text);
std::string format_polygon(const Polygon& p);  // literal form, space separated

Lamination parse_lamination(std::string_view text);
std::string serialize_lamination(const Lamination& lam);

FullCriticalCollection parse_critical(std::string_view text);
std::string serialize_critical(const FullCriticalCollection& fcc);

QCPortrait parse_portrait(std::string_view text);
std::string serialize_portrait(const QCPortrait& p);

CoTag parse_tag(std::string_view text);
std::string serialize_tag(const CoTag& t);

}  // namespace lamina
