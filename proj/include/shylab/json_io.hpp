#ifndef SHYLAB_JSON_IO_HPP
#define SHYLAB_JSON_IO_HPP

#include "json.hpp"
#include "shylab/constructions.hpp"
#include "shylab/digital_maps.hpp"
#include "shylab/pl_real.hpp"

namespace shylab {

// All parsers throw ParseError on anything wrong with the input, schema or
// semantics alike. Rationals are "p/q" or "p" strings; plain JSON integers
// are accepted too, floats never.

Rat rat_from_json(const nlohmann::json& v);
nlohmann::json rat_to_json(const Rat& x);

// { "dim": n, "points": [[ints]...],
//   "adjacency": "c1" | "c2" | ... | {"edges": [[i,j]...]} }
DigitalImage parse_image(const nlohmann::json& j);
nlohmann::json image_to_json(const DigitalImage& img);

// { "domain": <image>, "codomain": <image>, "table": [ints] }
DigitalMap parse_map(const nlohmann::json& j);
nlohmann::json map_to_json(const DigitalMap& f);

// { "circular": bool, "breakpoints": [[x, y], ...] }
PLFunction parse_pl(const nlohmann::json& j);
nlohmann::json pl_to_json(const PLFunction& f);

// As parse_pl plus "units": "turns".
AngleMap parse_angle_map(const nlohmann::json& j);
nlohmann::json angle_map_to_json(const AngleMap& m);

}  // namespace shylab

#endif
