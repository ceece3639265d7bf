#pragma once

#include <currentlab/finsler.hpp>
#include <currentlab/holonomy.hpp>
#include <currentlab/periodic.hpp>

#include <json.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace currentlab {

using Json = nlohmann::ordered_json;

// A current together with the point names used in its file.
struct NamedCurrent {
    DiscreteCurrent mu;
    std::map<BoundaryPoint, std::string> names;

    std::string name_of(const BoundaryPoint& p) const;
    std::string name_of(const Chord& c) const;
};

// Structural problems raise ParseError, invalid values ValidationError.
NamedCurrent current_from_json(const Json& j);
Json current_to_json(const DiscreteCurrent& mu);
Json current_to_json(const NamedCurrent& named);

PeriodicCurrent periodic_from_json(const Json& j);
Json periodic_to_json(const PeriodicCurrent& mu);
// "gamma-", "gamma+", "N:h" or "S:h".
PeriodicLocus parse_locus(const std::string& text);
bool is_periodic_json(const Json& j);

// [{"src": name, "dst": name, "value": "p/q"}, ...]; unlisted chords are 0.
LowerSubmeasure submeasure_from_json(const Json& j, const NamedCurrent& named, const CurrentPtr& mu);
Json submeasure_to_json(const LowerSubmeasure& nu, const NamedCurrent& named);

Complex complex_from_json(const Json& j);
Json complex_to_json(const Complex& z);
// {"g1": {"base": [x, y], "dir": [x, y]}, "g2": ..., "h1": ..., "h2": ...}
RayConfiguration rays_from_json(const Json& j);
Json rays_to_json(const RayConfiguration& c);
// {"points": [[x, y], ...]}
Polyline polyline_from_json(const Json& j);

Json parse_json_text(const std::string& text);
Json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace currentlab
