#include "usn/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace usn {

std::string write_labeling(const Labeling& labeling, const Provenance& provenance) {
    nlohmann::ordered_json j;
    j["n"] = labeling.size();
    auto labels = nlohmann::ordered_json::array();
    for (const auto& label : labeling.labels) {
        Label sorted = label;
        normalize_label(sorted);
        labels.push_back(sorted);
    }
    j["labels"] = std::move(labels);
    auto prov = nlohmann::ordered_json::object();
    for (const auto& [k, v] : provenance) prov[k] = v;
    j["provenance"] = std::move(prov);
    return j.dump(2) + "\n";
}

LabelingFile read_labeling(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("labeling: invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("labels"))
        throw std::runtime_error("labeling: expected object with \"n\" and \"labels\"");
    LabelingFile out;
    if (!j["n"].is_number_integer() || !j["labels"].is_array())
        throw std::runtime_error("labeling: malformed \"n\" or \"labels\"");
    int n = j["n"].get<int>();
    if (n != static_cast<int>(j["labels"].size()))
        throw std::runtime_error("labeling: \"n\" does not match the number of labels");
    for (const auto& entry : j["labels"]) {
        if (!entry.is_array()) throw std::runtime_error("labeling: label must be an array");
        Label label;
        for (const auto& e : entry) {
            if (!e.is_number_integer())
                throw std::runtime_error("labeling: element ids must be integers");
            label.push_back(e.get<int>());
        }
        normalize_label(label);
        out.labeling.labels.push_back(std::move(label));
    }
    if (j.contains("provenance") && j["provenance"].is_object())
        for (const auto& [k, v] : j["provenance"].items())
            out.provenance[k] = v.is_string() ? v.get<std::string>() : v.dump();
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << text;
}

Graph load_graph_file(const std::string& path, std::optional<GraphFormat> format) {
    GraphFormat f;
    if (format) {
        f = *format;
    } else {
        auto dot = path.rfind('.');
        std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
        f = (ext == "g6" || ext == "graph6") ? GraphFormat::graph6 : GraphFormat::edge_list;
    }
    return parse_graph(read_text_file(path), f);
}

}  // namespace usn
