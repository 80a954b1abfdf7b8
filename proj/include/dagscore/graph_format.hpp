#ifndef DAGSCORE_GRAPH_FORMAT_HPP
#define DAGSCORE_GRAPH_FORMAT_HPP

#include <string>
#include <vector>

#include "dagscore/graph.hpp"

namespace dagscore {

// Text format, one statement per line:
//
//   # optional comments
//   nodes: A,B,C
//   A -> B
//   B -- C
//
// Accepted operators: -> <- -- <->. Input may use LF or CRLF and arbitrary
// inline whitespace; output is canonical (LF, single spaces, statements
// sorted, `<-` never emitted).
MixedGraph parse_graph(const std::string& text);
std::string serialize_graph(const MixedGraph& graph);

struct ManifestGroup {
    std::string id;
    std::string true_path;
    std::vector<std::string> learnt_paths;
};

struct BatchManifest {
    std::vector<ManifestGroup> groups;
};

// JSON: {"groups":[{"id": text, "true": path, "learnt": [path, ...]}]}
BatchManifest parse_manifest(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace dagscore

#endif
