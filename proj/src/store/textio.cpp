// SPDX-License-Identifier: Apache-2.0
#include "ccarbon/store/textio.hpp"

#include <charconv>
#include <optional>
#include <unordered_set>

namespace ccarbon::store {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

struct Line {
    int number = 0;
    enum class Kind { Section, KeyValue } kind = Kind::KeyValue;
    std::string section;
    std::string key;
    std::string value;
};

// Lexes the key-value format: strips comments and blanks, classifies the rest.
std::vector<Line> lex(const std::string& text) {
    std::vector<Line> out;
    int number = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        std::string_view raw(text.data() + pos, (eol == std::string::npos ? text.size() : eol) - pos);
        pos = (eol == std::string::npos) ? text.size() + 1 : eol + 1;
        ++number;
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
        std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        Line l;
        l.number = number;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ParseError(number, "unterminated section header");
            l.kind = Line::Kind::Section;
            l.section = std::string(trim(line.substr(1, line.size() - 2)));
            if (l.section.empty())
                throw ParseError(number, "empty section name");
        } else {
            size_t eq = line.find('=');
            if (eq == std::string_view::npos)
                throw ParseError(number, "expected `key = value`");
            l.key = std::string(trim(line.substr(0, eq)));
            l.value = std::string(trim(line.substr(eq + 1)));
            if (l.key.empty())
                throw ParseError(number, "empty key");
        }
        out.push_back(std::move(l));
    }
    return out;
}

double parse_number(const Line& l) {
    std::string_view v = l.value;
    double out = 0.0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size())
        throw ParseError(l.number, "key \"" + l.key + "\": not a number: \"" + l.value + "\"");
    return out;
}

long parse_integer(const Line& l) {
    std::string_view v = l.value;
    long out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size())
        throw ParseError(l.number, "key \"" + l.key + "\": not an integer: \"" + l.value + "\"");
    return out;
}

// Collects `key = value` lines for one scope, rejecting duplicates and
// unknown keys.
class Scope {
public:
    Scope(std::string name, std::initializer_list<const char*> allowed)
        : name_(std::move(name)), allowed_(allowed.begin(), allowed.end()) {}

    void add(const Line& l) {
        if (!allowed_.count(l.key))
            throw ParseError(l.number, "unknown key \"" + l.key + "\" in " + name_);
        if (!lines_.emplace(l.key, l).second)
            throw ParseError(l.number, "duplicate key \"" + l.key + "\" in " + name_);
    }

    const Line* get(const std::string& key) const {
        auto it = lines_.find(key);
        return it == lines_.end() ? nullptr : &it->second;
    }

    const Line& require(const std::string& key) const {
        if (const Line* l = get(key)) return *l;
        throw ValidationError(name_ + ": missing required key \"" + key + "\"");
    }

private:
    std::string name_;
    std::unordered_set<std::string> allowed_;
    std::unordered_map<std::string, Line> lines_;
};

// Splits the lexed lines into the top-level scope and one scope per section.
struct Sections {
    Scope top;
    std::vector<std::pair<std::string, Scope>> entries;
};

Sections split_scopes(const std::vector<Line>& lines,
                      std::initializer_list<const char*> top_keys,
                      const std::unordered_map<std::string, std::initializer_list<const char*>>& section_keys) {
    Sections out{Scope("document", top_keys), {}};
    Scope* current = &out.top;
    bool in_section = false;
    for (const auto& l : lines) {
        if (l.kind == Line::Kind::Section) {
            auto it = section_keys.find(l.section);
            if (it == section_keys.end())
                throw ParseError(l.number, "unknown section [" + l.section + "]");
            out.entries.emplace_back(l.section, Scope("[" + l.section + "]", it->second));
            current = &out.entries.back().second;
            in_section = true;
        } else {
            if (!in_section && !out.entries.empty())
                throw ParseError(l.number, "top-level key \"" + l.key + "\" after a section");
            current->add(l);
        }
    }
    return out;
}

void check_schema_version(const Scope& top) {
    const long v = parse_integer(top.require("schema_version"));
    if (v != kSchemaVersion)
        throw ValidationError("schema_version: unsupported version " + std::to_string(v) +
                              " (supported: " + std::to_string(kSchemaVersion) + ")");
}

}  // namespace

std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

FactorSet parse_factor_set(const std::string& text) {
    auto scopes = split_scopes(lex(text),
                               {"schema_version", "name", "vintage"},
                               {{"factor", {"id", "class", "kg_co2e_per_cm2", "note"}}});
    check_schema_version(scopes.top);

    FactorSet fs;
    fs.name = scopes.top.require("name").value;
    if (const Line* l = scopes.top.get("vintage")) fs.vintage = l->value;
    for (auto& [section, scope] : scopes.entries) {
        EmissionFactor f;
        f.id = scope.require("id").value;
        f.applies_to = component_class_from_string(scope.require("class").value);
        f.kg_per_cm2 = parse_number(scope.require("kg_co2e_per_cm2"));
        if (const Line* l = scope.get("note")) f.source_note = l->value;
        fs.factors.push_back(std::move(f));
    }
    validate(fs);
    return fs;
}

std::string serialize_factor_set(const FactorSet& fs) {
    std::string out;
    out += "schema_version = " + std::to_string(kSchemaVersion) + "\n";
    out += "name = " + fs.name + "\n";
    if (!fs.vintage.empty()) out += "vintage = " + fs.vintage + "\n";
    for (const auto& f : fs.factors) {
        out += "\n[factor]\n";
        out += "id = " + f.id + "\n";
        out += "class = " + to_string(f.applies_to) + "\n";
        out += "kg_co2e_per_cm2 = " + format_double(f.kg_per_cm2) + "\n";
        if (!f.source_note.empty()) out += "note = " + f.source_note + "\n";
    }
    return out;
}

ProfileDocument parse_profile(const std::string& text, const FactorSet& factors) {
    auto scopes = split_scopes(
        lex(text),
        {"schema_version", "factor_set", "system_name", "provenance", "lifetime_years",
         "hours_per_year", "embodied_override_kg"},
        {{"component", {"name", "class", "area_cm2", "count", "factor"}},
         {"mode", {"name", "power_w", "time_fraction"}}});
    check_schema_version(scopes.top);

    ProfileDocument d;
    d.factor_set = scopes.top.require("factor_set").value;
    if (d.factor_set != factors.name)
        throw ValidationError("factor_set: document references \"" + d.factor_set +
                              "\" but factor set \"" + factors.name + "\" was provided");
    d.system.system_name = scopes.top.require("system_name").value;
    if (const Line* l = scopes.top.get("provenance")) d.provenance = l->value;
    d.default_lifetime.service_life_years = parse_number(scopes.top.require("lifetime_years"));
    if (const Line* l = scopes.top.get("hours_per_year"))
        d.profile.hours_per_year = parse_number(*l);
    if (const Line* l = scopes.top.get("embodied_override_kg"))
        d.system.embodied_override_kg = parse_number(*l);

    for (auto& [section, scope] : scopes.entries) {
        if (section == "component") {
            ComponentSpec c;
            c.name = scope.require("name").value;
            c.cls = component_class_from_string(scope.require("class").value);
            c.unit_area_cm2 = parse_number(scope.require("area_cm2"));
            if (const Line* l = scope.get("count")) c.count = parse_integer(*l);
            const std::string factor_id = scope.require("factor").value;
            const EmissionFactor* f = factors.find(factor_id);
            if (!f)
                throw ValidationError("component \"" + c.name + "\": unknown factor id \"" +
                                      factor_id + "\" in factor set \"" + factors.name + "\"");
            c.factor = *f;
            d.system.components.push_back(std::move(c));
        } else {  // mode
            PowerMode m;
            m.name = scope.require("name").value;
            m.power_w = parse_number(scope.require("power_w"));
            m.time_fraction = parse_number(scope.require("time_fraction"));
            d.profile.modes.push_back(std::move(m));
        }
    }
    validate(d);
    return d;
}

std::string serialize_profile(const ProfileDocument& d) {
    std::string out;
    out += "schema_version = " + std::to_string(kSchemaVersion) + "\n";
    out += "factor_set = " + d.factor_set + "\n";
    out += "system_name = " + d.system.system_name + "\n";
    if (!d.provenance.empty()) out += "provenance = " + d.provenance + "\n";
    out += "lifetime_years = " + format_double(d.default_lifetime.service_life_years) + "\n";
    out += "hours_per_year = " + format_double(d.profile.hours_per_year) + "\n";
    if (d.system.embodied_override_kg)
        out += "embodied_override_kg = " + format_double(*d.system.embodied_override_kg) + "\n";
    for (const auto& c : d.system.components) {
        out += "\n[component]\n";
        out += "name = " + c.name + "\n";
        out += "class = " + to_string(c.cls) + "\n";
        out += "area_cm2 = " + format_double(c.unit_area_cm2) + "\n";
        out += "count = " + std::to_string(c.count) + "\n";
        out += "factor = " + c.factor.id + "\n";
    }
    for (const auto& m : d.profile.modes) {
        out += "\n[mode]\n";
        out += "name = " + m.name + "\n";
        out += "power_w = " + format_double(m.power_w) + "\n";
        out += "time_fraction = " + format_double(m.time_fraction) + "\n";
    }
    return out;
}

GridTable parse_grid_table(const std::string& text) {
    GridTable gt;
    std::unordered_set<std::string> labels;
    int number = 0;
    bool header_seen = false;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        std::string_view raw(text.data() + pos, (eol == std::string::npos ? text.size() : eol) - pos);
        pos = (eol == std::string::npos) ? text.size() + 1 : eol + 1;
        ++number;
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
        std::string_view line = trim(raw);
        if (line.empty()) continue;
        if (!header_seen) {
            if (line != "label,kg_co2e_per_kwh")
                throw ParseError(number, "expected header `label,kg_co2e_per_kwh`");
            header_seen = true;
            continue;
        }
        size_t comma = line.find(',');
        if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos)
            throw ParseError(number, "expected exactly two fields `label,value`");
        std::string label(trim(line.substr(0, comma)));
        std::string_view value = trim(line.substr(comma + 1));
        if (label.empty())
            throw ParseError(number, "empty grid label");
        if (!labels.insert(label).second)
            throw ParseError(number, "duplicate grid label \"" + label + "\"");
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
        if (ec != std::errc{} || ptr != value.data() + value.size())
            throw ParseError(number, "not a number: \"" + std::string(value) + "\"");
        if (!(v >= 0.0))
            throw ParseError(number, "grid \"" + label + "\": kg_co2e_per_kwh must be >= 0");
        gt.entries.push_back({std::move(label), v});
    }
    if (!header_seen)
        throw ValidationError("grid table: missing header `label,kg_co2e_per_kwh`");
    return gt;
}

std::string serialize_grid_table(const GridTable& gt) {
    std::string out = "label,kg_co2e_per_kwh\n";
    for (const auto& g : gt.entries)
        out += g.label + "," + format_double(g.kg_per_kwh) + "\n";
    return out;
}

}  // namespace ccarbon::store
