#include "homext/json_io.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace homext {

namespace {

using nlohmann::json;

json quiver_json(const QuiverWithRelations& q) {
    json out;
    out["schema_version"] = kSchemaVersion;
    out["vertices"] = q.vertices;
    json arrows = json::array();
    for (const auto& a : q.arrows) {
        json arrow;
        arrow["src"] = a.src;
        arrow["tgt"] = a.tgt;
        if (a.degree >= 0) arrow["degree"] = a.degree;
        arrows.push_back(std::move(arrow));
    }
    out["arrows"] = std::move(arrows);
    json rels = json::array();
    for (const auto& [x, y] : q.relations) rels.push_back(json::array({x, y}));
    out["relations"] = std::move(rels);
    return out;
}

}  // namespace

std::string quiver_to_json(const QuiverWithRelations& q, int indent) {
    return quiver_json(q).dump(indent);
}

std::string homext_to_json(const HomExtQuiver& h, int indent) {
    json out = quiver_json(h.quiver);
    json mods = json::array();
    for (const StringModule& m : h.modules) mods.push_back(m.to_string());
    out["modules"] = std::move(mods);
    return out.dump(indent);
}

std::string superquiver_to_json(const Superquiver& s, int indent) {
    json out = quiver_json(s.quiver);
    for (size_t a = 0; a < s.frozen.size(); ++a) out["arrows"][a]["frozen"] = bool(s.frozen[a]);
    return out.dump(indent);
}

std::string diagram_to_json(const ArcDiagram& d, int indent) {
    json out;
    out["schema_version"] = kSchemaVersion;
    out["epsilon"] = d.annulus.eps().to_string();
    json arcs = json::array();
    for (const Arc& a : d.arcs) {
        json arc;
        arc["i"] = a.i;
        arc["j"] = a.j;
        arc["lambda"] = a.lambda;
        arcs.push_back(std::move(arc));
    }
    out["arcs"] = std::move(arcs);
    return out.dump(indent);
}

std::vector<StringModule> parse_collection(const std::string& text) {
    std::vector<StringModule> out;
    // JSON alternative: first meaningful character opens an object or array
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) {
        json doc = json::parse(text, nullptr, false);
        if (doc.is_discarded()) throw ParseError("collection file is not valid JSON");
        const json* list = nullptr;
        if (doc.is_array()) list = &doc;
        else if (doc.contains("modules") && doc["modules"].is_array()) list = &doc["modules"];
        else throw ParseError("JSON collection needs a top-level array or a \"modules\" array");
        for (const json& item : *list) {
            if (item.is_string()) {
                out.push_back(StringModule::parse(item.get<std::string>()));
            } else if (item.is_object()) {
                if (!item.contains("i") || !item.contains("j") || !item.contains("l"))
                    throw ParseError("JSON module entries need i, j and l");
                out.push_back(StringModule{item["i"].get<int>(), item["j"].get<int>(),
                                           item["l"].get<int>()});
            } else {
                throw ParseError("JSON module entry has an unexpected type");
            }
        }
        return out;
    }
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        size_t begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        size_t end = line.find_last_not_of(" \t\r");
        out.push_back(StringModule::parse(line.substr(begin, end - begin + 1)));
    }
    return out;
}

std::string write_collection(const std::vector<StringModule>& modules) {
    std::vector<StringModule> sorted = modules;
    std::sort(sorted.begin(), sorted.end());
    std::string out;
    for (const StringModule& m : sorted) {
        out += m.to_string();
        out += '\n';
    }
    return out;
}

}  // namespace homext
