#include "currentlab/io.hpp"

#include "currentlab/errors.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace currentlab {

namespace {

const Json& field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) throw ParseError(where + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(where + ": missing key '" + key + "'");
    return *it;
}

std::string as_string(const Json& j, const std::string& where) {
    if (!j.is_string()) throw ParseError(where + ": expected a string");
    return j.get<std::string>();
}

Rational as_rational(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(mpz_class(std::to_string(j.get<long long>())));
    return parse_rational(as_string(j, where));
}

long as_integer(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) throw ParseError(where + ": expected an integer");
    return j.get<long>();
}

double as_double(const Json& j, const std::string& where) {
    if (!j.is_number()) throw ParseError(where + ": expected a number");
    double v = j.get<double>();
    if (!std::isfinite(v)) throw ValidationError(where + ": not finite");
    return v;
}

Side parse_side(const Json& j, const std::string& where) {
    auto s = as_string(j, where);
    if (s == "N") return Side::North;
    if (s == "S") return Side::South;
    throw ParseError(where + ": side must be \"N\" or \"S\", got '" + s + "'");
}

PeriodicPoint parse_periodic_point(const Json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 3) throw ParseError(where + ": expected [side, slot, power]");
    long slot = as_integer(j[1], where + " slot");
    if (slot < 0) throw ValidationError(where + ": negative slot index");
    return {parse_side(j[0], where), size_t(slot), as_integer(j[2], where + " power")};
}

Json periodic_point_json(const PeriodicPoint& p) {
    return Json::array({p.side == Side::North ? "N" : "S", p.slot, p.power});
}

Ray ray_from_json(const Json& j, const std::string& where) {
    return {complex_from_json(field(j, "base", where)), complex_from_json(field(j, "dir", where))};
}

}  // namespace

std::string NamedCurrent::name_of(const BoundaryPoint& p) const {
    auto it = names.find(p);
    return it == names.end() ? to_string(p) : it->second;
}

std::string NamedCurrent::name_of(const Chord& c) const { return name_of(c.src()) + "->" + name_of(c.dst()); }

NamedCurrent current_from_json(const Json& j) {
    const Json& points = field(j, "points", "current");
    const Json& chords = field(j, "chords", "current");
    if (!points.is_object()) throw ParseError("current: 'points' must be an object");
    if (!chords.is_array()) throw ParseError("current: 'chords' must be an array");
    std::map<std::string, BoundaryPoint> by_name;
    NamedCurrent out;
    for (auto it = points.begin(); it != points.end(); ++it) {
        Rational a = as_rational(it.value(), "point " + it.key());
        if (a < 0 || a >= 1) throw ValidationError("point " + it.key() + ": angle " + to_string(a) + " outside [0,1)");
        BoundaryPoint p(a);
        if (out.names.count(p)) throw ValidationError("points " + out.names[p] + " and " + it.key() + " share an angle");
        by_name.emplace(it.key(), p);
        out.names.emplace(p, it.key());
    }
    std::vector<std::pair<Chord, Rational>> entries;
    for (size_t i = 0; i < chords.size(); ++i) {
        std::string where = "chord " + std::to_string(i);
        auto endpoint = [&](const char* key) {
            auto name = as_string(field(chords[i], key, where), where);
            auto it = by_name.find(name);
            if (it == by_name.end()) throw ValidationError(where + ": unknown point '" + name + "'");
            return it->second;
        };
        BoundaryPoint s = endpoint("src"), d = endpoint("dst");
        Rational w = as_rational(field(chords[i], "weight", where), where + " weight");
        entries.emplace_back(Chord(s, d), w);
    }
    out.mu = DiscreteCurrent(entries);
    return out;
}

Json current_to_json(const DiscreteCurrent& mu) { return current_to_json(NamedCurrent{mu, {}}); }

Json current_to_json(const NamedCurrent& named) {
    Json points = Json::object();
    std::map<BoundaryPoint, std::string> used;
    std::set<std::string> taken;
    for (const auto& p : named.mu.endpoints()) {
        auto it = named.names.find(p);
        if (it != named.names.end() && !taken.count(it->second)) used[p] = it->second;
        else used[p] = "";
        if (!used[p].empty()) taken.insert(used[p]);
    }
    size_t next = 0;
    for (auto& [p, name] : used) {
        while (name.empty()) {
            std::string candidate = "p" + std::to_string(next++);
            if (!taken.count(candidate)) name = candidate, taken.insert(candidate);
        }
        points[name] = to_string(p.angle());
    }
    Json chords = Json::array();
    for (size_t i = 0; i < named.mu.size(); ++i)
        chords.push_back({{"src", used.at(named.mu.chord(i).src())},
                          {"dst", used.at(named.mu.chord(i).dst())},
                          {"weight", to_string(named.mu.weight(i))}});
    return {{"points", points}, {"chords", chords}};
}

bool is_periodic_json(const Json& j) { return j.is_object() && j.contains("sides"); }

PeriodicCurrent periodic_from_json(const Json& j) {
    const Json& sides = field(j, "sides", "periodic current");
    const Json& chords = field(j, "chords", "periodic current");
    if (!chords.is_array()) throw ParseError("periodic current: 'chords' must be an array");
    auto slots = [&](const char* key) {
        const Json& list = field(sides, key, "sides");
        if (!list.is_array()) throw ParseError(std::string("sides.") + key + " must be an array");
        std::vector<Rational> out;
        for (const auto& h : list) out.push_back(as_rational(h, std::string("sides.") + key));
        return out;
    };
    std::vector<PeriodicOrbit> orbits;
    for (size_t i = 0; i < chords.size(); ++i) {
        std::string where = "chord " + std::to_string(i);
        orbits.push_back({parse_periodic_point(field(chords[i], "src", where), where + " src"),
                          parse_periodic_point(field(chords[i], "dst", where), where + " dst"),
                          as_rational(field(chords[i], "weight", where), where + " weight")});
    }
    return PeriodicCurrent(slots("N"), slots("S"), orbits);
}

Json periodic_to_json(const PeriodicCurrent& mu) {
    auto list = [](const std::vector<Rational>& v) {
        Json a = Json::array();
        for (const auto& h : v) a.push_back(to_string(h));
        return a;
    };
    Json chords = Json::array();
    for (const auto& o : mu.orbits())
        chords.push_back({{"src", periodic_point_json(o.src)},
                          {"dst", periodic_point_json(o.dst)},
                          {"weight", to_string(o.weight)}});
    return {{"sides", {{"N", list(mu.slots(Side::North))}, {"S", list(mu.slots(Side::South))}}}, {"chords", chords}};
}

PeriodicLocus parse_locus(const std::string& text) {
    if (text == "gamma-") return PeriodicLocus::repelling();
    if (text == "gamma+") return PeriodicLocus::attracting();
    if (text.size() > 2 && text[1] == ':' && (text[0] == 'N' || text[0] == 'S'))
        return PeriodicLocus::on(text[0] == 'N' ? Side::North : Side::South, parse_rational(text.substr(2)));
    throw ParseError("malformed periodic point '" + text + "' (gamma-, gamma+, N:h or S:h)");
}

LowerSubmeasure submeasure_from_json(const Json& j, const NamedCurrent& named, const CurrentPtr& mu) {
    if (!j.is_array()) throw ParseError("submeasure: expected an array of chord values");
    std::map<std::string, BoundaryPoint> by_name;
    for (const auto& [p, name] : named.names) by_name.emplace(name, p);
    std::vector<Rational> values(mu->size(), Rational(0));
    for (size_t i = 0; i < j.size(); ++i) {
        std::string where = "submeasure entry " + std::to_string(i);
        auto endpoint = [&](const char* key) {
            auto name = as_string(field(j[i], key, where), where);
            auto it = by_name.find(name);
            if (it == by_name.end()) throw ValidationError(where + ": unknown point '" + name + "'");
            return it->second;
        };
        Chord c(endpoint("src"), endpoint("dst"));
        auto idx = mu->index_of(c);
        if (!idx) throw ValidationError(where + ": chord " + named.name_of(c) + " is not in the support");
        values[*idx] = as_rational(field(j[i], "value", where), where + " value");
    }
    return LowerSubmeasure(mu, values);
}

Json submeasure_to_json(const LowerSubmeasure& nu, const NamedCurrent& named) {
    Json out = Json::array();
    for (size_t i = 0; i < nu.parent().size(); ++i) {
        if (nu.value(i) == 0) continue;
        const Chord& c = nu.parent().chord(i);
        out.push_back({{"src", named.name_of(c.src())}, {"dst", named.name_of(c.dst())}, {"value", to_string(nu.value(i))}});
    }
    return out;
}

Complex complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw ParseError("point: expected [x, y]");
    return {as_double(j[0], "point x"), as_double(j[1], "point y")};
}

Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

RayConfiguration rays_from_json(const Json& j) {
    return {ray_from_json(field(j, "g1", "configuration"), "g1"), ray_from_json(field(j, "g2", "configuration"), "g2"),
            ray_from_json(field(j, "h1", "configuration"), "h1"), ray_from_json(field(j, "h2", "configuration"), "h2")};
}

Json rays_to_json(const RayConfiguration& c) {
    auto ray = [](const Ray& r) { return Json{{"base", complex_to_json(r.base)}, {"dir", complex_to_json(r.dir)}}; };
    return {{"g1", ray(c.g1)}, {"g2", ray(c.g2)}, {"h1", ray(c.h1)}, {"h2", ray(c.h2)}};
}

Polyline polyline_from_json(const Json& j) {
    const Json& pts = field(j, "points", "polyline");
    if (!pts.is_array()) throw ParseError("polyline: 'points' must be an array");
    Polyline out;
    for (const auto& p : pts) out.push_back(complex_from_json(p));
    validate_polyline(out);
    return out;
}

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IOError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json read_json_file(const std::string& path) { return parse_json_text(read_text_file(path)); }

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IOError("cannot write '" + path + "'");
    out << text;
    if (!out) throw IOError("write to '" + path + "' failed");
}

}  // namespace currentlab
