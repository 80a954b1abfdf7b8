#include "dagscore/graph_format.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

#include <json.hpp>

namespace dagscore {

namespace {

std::string strip_comment(const std::string& line) {
    auto hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

std::string trim(const std::string& text) {
    auto begin = text.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    auto end = text.find_last_not_of(" \t\r");
    return text.substr(begin, end - begin + 1);
}

std::vector<std::string> whitespace_tokens(const std::string& text) {
    std::vector<std::string> tokens;
    std::istringstream stream(text);
    std::string token;
    while (stream >> token) tokens.push_back(token);
    return tokens;
}

bool is_edge_operator(const std::string& token) {
    return token == "->" || token == "<-" || token == "--" || token == "<->";
}

} // namespace

MixedGraph parse_graph(const std::string& text) {
    std::istringstream stream(text);
    std::string raw;
    int line_no = 0;

    // Header: first meaningful line must declare the node set.
    std::vector<std::string> labels;
    bool header_seen = false;
    int header_line = 0;
    while (std::getline(stream, raw)) {
        ++line_no;
        std::string line = trim(strip_comment(raw));
        if (line.empty()) continue;
        if (line.rfind("nodes:", 0) != 0) {
            throw Error(ErrorKind::MissingNodesHeader,
                        "line " + std::to_string(line_no) + ": expected 'nodes:' header",
                        line_no, 1);
        }
        std::string list = line.substr(6);
        std::string token;
        std::istringstream items(list);
        while (std::getline(items, token, ',')) {
            labels.push_back(trim(token));
        }
        header_seen = true;
        header_line = line_no;
        break;
    }
    if (!header_seen) {
        throw Error(ErrorKind::MissingNodesHeader, "missing 'nodes:' header", line_no, 1);
    }
    for (const std::string& label : labels) {
        if (!valid_node_label(label)) {
            throw Error(ErrorKind::SyntaxError,
                        "line " + std::to_string(header_line) + ": invalid node label '" + label +
                            "'",
                        header_line, 1);
        }
    }

    MixedGraph graph = [&] {
        try {
            return MixedGraph(labels);
        } catch (const Error& e) {
            throw Error(e.kind(), "line " + std::to_string(header_line) + ": " + e.what(),
                        header_line, 1);
        }
    }();

    std::set<std::pair<std::string, std::string>> seen_pairs;
    while (std::getline(stream, raw)) {
        ++line_no;
        std::string line = trim(strip_comment(raw));
        if (line.empty()) continue;
        auto tokens = whitespace_tokens(line);
        if (tokens.size() != 3 || !is_edge_operator(tokens[1])) {
            throw Error(ErrorKind::SyntaxError,
                        "line " + std::to_string(line_no) +
                            ": expected '<node> (->|<-|--|<->) <node>'",
                        line_no, 1);
        }
        std::string a = tokens[0];
        std::string op = tokens[1];
        std::string b = tokens[2];
        for (const std::string& endpoint : {a, b}) {
            if (!graph.has_node(endpoint)) {
                throw Error(ErrorKind::UnknownNodeInEdge,
                            "line " + std::to_string(line_no) + ": node '" + endpoint +
                                "' not declared in header",
                            line_no, 1);
            }
        }
        if (a == b) {
            throw Error(ErrorKind::SyntaxError,
                        "line " + std::to_string(line_no) + ": self loop on '" + a + "'", line_no,
                        1);
        }
        auto key = std::minmax(a, b);
        if (!seen_pairs.insert(key).second) {
            throw Error(ErrorKind::DuplicatePair,
                        "line " + std::to_string(line_no) + ": pair {" + key.first + "," +
                            key.second + "} already has a statement",
                        line_no, 1);
        }
        if (op == "->") graph.add_arc(a, b);
        else if (op == "<-") graph.add_arc(b, a);
        else if (op == "--") graph.add_undirected(a, b);
        else graph.add_bidirected(a, b);
    }
    return graph;
}

std::string serialize_graph(const MixedGraph& graph) {
    std::ostringstream out;
    const auto& labels = graph.node_labels();
    out << "nodes: ";
    for (std::size_t k = 0; k < labels.size(); ++k) {
        if (k) out << ",";
        out << labels[k];
    }
    out << "\n";

    std::vector<std::tuple<std::string, std::string, std::string>> statements;
    for (const auto& [pair, mark] : graph.pairs()) {
        std::string lo = labels[pair.first];
        std::string hi = labels[pair.second];
        switch (mark) {
        case MixedGraph::PairMark::Forward:
            statements.emplace_back(lo, "->", hi);
            break;
        case MixedGraph::PairMark::Backward:
            statements.emplace_back(hi, "->", lo);
            break;
        case MixedGraph::PairMark::Undirected:
            statements.emplace_back(std::min(lo, hi), "--", std::max(lo, hi));
            break;
        case MixedGraph::PairMark::Bidirected:
            statements.emplace_back(std::min(lo, hi), "<->", std::max(lo, hi));
            break;
        }
    }
    std::sort(statements.begin(), statements.end(),
              [](const auto& x, const auto& y) {
                  if (std::get<0>(x) != std::get<0>(y)) return std::get<0>(x) < std::get<0>(y);
                  if (std::get<2>(x) != std::get<2>(y)) return std::get<2>(x) < std::get<2>(y);
                  return std::get<1>(x) < std::get<1>(y);
              });
    for (const auto& [a, op, b] : statements) {
        out << a << " " << op << " " << b << "\n";
    }
    return out.str();
}

BatchManifest parse_manifest(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::SyntaxError, std::string("manifest: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("groups") || !doc["groups"].is_array()) {
        throw Error(ErrorKind::SyntaxError, "manifest: expected object with a 'groups' array");
    }
    BatchManifest manifest;
    std::set<std::string> ids;
    std::set<std::string> learnt_seen;
    for (const auto& item : doc["groups"]) {
        if (!item.is_object() || !item.contains("id") || !item.contains("true") ||
            !item.contains("learnt") || !item["id"].is_string() || !item["true"].is_string() ||
            !item["learnt"].is_array()) {
            throw Error(ErrorKind::SyntaxError,
                        "manifest: each group needs 'id', 'true' and a 'learnt' array");
        }
        ManifestGroup group;
        group.id = item["id"].get<std::string>();
        group.true_path = item["true"].get<std::string>();
        for (const auto& path : item["learnt"]) {
            if (!path.is_string()) {
                throw Error(ErrorKind::SyntaxError, "manifest: learnt paths must be strings");
            }
            group.learnt_paths.push_back(path.get<std::string>());
        }
        if (group.id.empty()) {
            throw Error(ErrorKind::SyntaxError, "manifest: group id must be non-empty");
        }
        if (!ids.insert(group.id).second) {
            throw Error(ErrorKind::DuplicateGroupId,
                        "manifest: duplicate group id '" + group.id + "'");
        }
        if (group.learnt_paths.empty()) {
            throw Error(ErrorKind::EmptyGroup,
                        "manifest: group '" + group.id + "' has no learnt graphs");
        }
        for (const auto& path : group.learnt_paths) {
            if (!learnt_seen.insert(path).second) {
                throw Error(ErrorKind::SyntaxError,
                            "manifest: learnt path '" + path + "' listed more than once");
            }
        }
        manifest.groups.push_back(std::move(group));
    }
    return manifest;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorKind::IoFailure, "cannot read '" + path + "'");
    }
    std::ostringstream content;
    content << in.rdbuf();
    return content.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error(ErrorKind::IoFailure, "cannot write '" + path + "'");
    }
    out << content;
    if (!out) {
        throw Error(ErrorKind::IoFailure, "write failed for '" + path + "'");
    }
}

} // namespace dagscore
