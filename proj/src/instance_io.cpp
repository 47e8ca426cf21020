#include "pgic/instance_io.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "pgic/error.hpp"

namespace pgic {

namespace {

using nlohmann::json;

void require_keys(const json& obj, const std::set<std::string>& keys, const std::string& where) {
    if (!obj.is_object()) throw Error(Errc::ParseError, where + " must be a JSON object");
    for (const auto& [key, value] : obj.items()) {
        if (!keys.count(key)) throw Error(Errc::ParseError, "unknown key \"" + key + "\" in " + where);
    }
    for (const std::string& key : keys) {
        if (!obj.contains(key)) throw Error(Errc::ParseError, "missing key \"" + key + "\" in " + where);
    }
}

double number(const json& obj, const std::string& key, const std::string& where) {
    const json& v = obj.at(key);
    if (!v.is_number()) throw Error(Errc::ParseError, "\"" + key + "\" in " + where + " must be a number");
    return v.get<double>();
}

}  // namespace

PgicInstance parse_instance(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(Errc::ParseError, std::string("malformed JSON: ") + e.what());
    }
    require_keys(doc, {"channels", "P", "Q"}, "instance");
    const json& list = doc.at("channels");
    if (!list.is_array()) throw Error(Errc::ParseError, "\"channels\" must be an array");

    std::vector<SubChannel> channels;
    for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string where = "channel " + std::to_string(i);
        require_keys(list[i], {"a", "b", "c", "d"}, where);
        channels.emplace_back(number(list[i], "a", where), number(list[i], "b", where), number(list[i], "c", where),
                              number(list[i], "d", where));
    }
    return PgicInstance(std::move(channels), number(doc, "P", "instance"), number(doc, "Q", "instance"));
}

PgicInstance load_instance(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::ParseError, "cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

std::string instance_to_json(const PgicInstance& inst) {
    json doc;
    doc["channels"] = json::array();
    for (const SubChannel& ch : inst.channels()) {
        doc["channels"].push_back({{"a", ch.a()}, {"b", ch.b()}, {"c", ch.c()}, {"d", ch.d()}});
    }
    doc["P"] = inst.total_p();
    doc["Q"] = inst.total_q();
    return doc.dump(2);
}

std::string format_number(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string csv_row(const std::vector<std::string>& fields) {
    std::string line;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) line += ',';
        const std::string& f = fields[i];
        if (f.find_first_of(",\"\n") == std::string::npos) {
            line += f;
            continue;
        }
        line += '"';
        for (char ch : f) {
            if (ch == '"') line += '"';
            line += ch;
        }
        line += '"';
    }
    return line;
}

}  // namespace pgic
