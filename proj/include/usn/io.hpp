// Serialization: labeling JSON (bit-exact round trip) and graph file loading
// with format auto-detection.
#pragma once

#include <map>
#include <optional>
#include <string>

#include "usn/graph.hpp"
#include "usn/labeling.hpp"

namespace usn {

// Free-form provenance note attached to construction outputs
// (family, parameters, base labeling id, rounds applied).
using Provenance = std::map<std::string, std::string>;

// JSON object {"n": ..., "labels": [[sorted ids]...], "provenance": {...}}.
// Serialization is canonical (sorted labels, fixed key order), so
// serialize(parse(serialize(x))) == serialize(x) byte for byte.
std::string write_labeling(const Labeling& labeling, const Provenance& provenance = {});

struct LabelingFile {
    Labeling labeling;
    Provenance provenance;
};

// Throws std::runtime_error on malformed input.
LabelingFile read_labeling(const std::string& text);

// Reads a graph file; format from `format` if given, else by extension
// (.g6 => graph6, anything else edge list).
Graph load_graph_file(const std::string& path, std::optional<GraphFormat> format = {});

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace usn
