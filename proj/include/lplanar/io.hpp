#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lplanar/embedding.hpp"

namespace lplanar {

class ParseError : public GraphError {
public:
    ParseError(const std::string& src, int line, const std::string& msg)
        : GraphError(src + ":" + std::to_string(line) + ": " + msg), line(line) {}
    int line;
};

struct GraphFile {
    DirectedGraph graph;
    // "order: v w1 w2 ..." lines: fixed left-to-right successor order of v.
    std::vector<std::pair<Vertex, std::vector<Vertex>>> orders;
};

GraphFile parse_graph(const std::string& text, const std::string& source = "<input>");
std::string write_graph(const DirectedGraph& g);

PlaneEmbedding parse_embedding(const DirectedGraph& g, const std::string& text, const std::string& source = "<input>");
std::string write_embedding(const DirectedGraph& g, const PlaneEmbedding& emb);

std::string read_file(const std::string& path);
// Write via temporary file and rename.
void write_file_atomic(const std::string& path, const std::string& content);

std::vector<std::string> split_ws(const std::string& s);
// Letters, digits, '_', '\'' and '.'.
bool valid_name(const std::string& s);
// Non-blank lines with '#' comments stripped, paired with 1-based line numbers.
std::vector<std::pair<int, std::string>> content_lines(const std::string& text);

}  // namespace lplanar
