#include "cspace/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cspace {

using nlohmann::json;

Space space_from_json_text(const std::string& text, bool force) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw DomainError(std::string("space file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("points") || !doc.contains("maximal_consistent"))
        throw DomainError("space file must be an object with 'points' and 'maximal_consistent'");
    if (!doc["points"].is_array() || !doc["maximal_consistent"].is_array())
        throw DomainError("'points' and 'maximal_consistent' must be arrays");

    std::vector<std::string> labels;
    for (const auto& p : doc["points"]) {
        if (!p.is_string()) throw DomainError("every point must be a string label");
        labels.push_back(p.get<std::string>());
    }
    if (labels.size() > Bitset::kCapacity)
        throw DomainError("space file has " + std::to_string(labels.size()) +
                          " points; at most " + std::to_string(Bitset::kCapacity) +
                          " are supported");

    auto index_of = [&](const std::string& l) -> unsigned {
        for (unsigned i = 0; i < labels.size(); ++i)
            if (labels[i] == l) return i;
        throw DomainError("maximal set references unknown label '" + l + "'");
    };

    std::vector<Bitset> maximal;
    for (const auto& set : doc["maximal_consistent"]) {
        if (!set.is_array()) throw DomainError("every maximal set must be an array of labels");
        Bitset s(static_cast<unsigned>(labels.size()));
        for (const auto& l : set) {
            if (!l.is_string()) throw DomainError("every maximal set member must be a label");
            s.set(index_of(l.get<std::string>()));
        }
        maximal.push_back(s);
    }

    Space space(std::move(labels), std::move(maximal), "file");
    if (!force) {
        ValidationReport rep = validate(space);
        if (!rep.ok())
            throw BuildError("space file is invalid:\n" + render_validation(space, rep),
                             std::move(rep));
    }
    return space;
}

std::string space_to_json_text(const Space& space) {
    json doc;
    doc["points"] = json::array();
    for (const Point& p : space.points()) doc["points"].push_back(p.label);
    doc["maximal_consistent"] = json::array();
    for (const Bitset& m : space.maximal()) {
        json set = json::array();
        for (unsigned i : m.indices()) set.push_back(space.label(i));
        doc["maximal_consistent"].push_back(std::move(set));
    }
    return doc.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open file: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write file: " + path);
    out << content;
    if (!out) throw UsageError("write failed: " + path);
}

Space load_space(const std::string& path, bool force) {
    return space_from_json_text(read_text_file(path), force);
}

void save_space(const Space& space, const std::string& path) {
    write_text_file(path, space_to_json_text(space));
}

std::vector<LabeledFormula> load_formula_list(const std::string& path) {
    return parse_formula_list(read_text_file(path));
}

}  // namespace cspace
