#include "core/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "core/errors.hpp"

namespace hokm {

Hypergraph load_hypergraph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::io, "cannot open hypergraph file: " + path);
    std::string line;
    int n = -1;
    std::vector<Hypergraph::Edge> edges;
    std::vector<Hypergraph::Triangle> triangles;
    int lineno = 0;
    auto fail = [&](const std::string& msg) -> void {
        throw Error(ErrorCode::parse, path + ":" + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string tag;
        if (!(ss >> tag) || tag[0] == '#') continue;
        if (tag == "n") {
            if (n >= 0) fail("duplicate header");
            if (!(ss >> n) || n < 1) fail("bad node count");
        } else if (tag == "e") {
            int i, j;
            if (n < 0) fail("edge before header");
            if (!(ss >> i >> j)) fail("bad edge line");
            edges.push_back({i, j});
        } else if (tag == "t") {
            int i, j, k;
            if (n < 0) fail("triangle before header");
            if (!(ss >> i >> j >> k)) fail("bad triangle line");
            triangles.push_back({i, j, k});
        } else {
            fail("unknown record '" + tag + "'");
        }
        std::string extra;
        if (ss >> extra && extra[0] != '#') fail("trailing tokens");
    }
    if (n < 0) throw Error(ErrorCode::parse, path + ": missing 'n <count>' header");
    try {
        return Hypergraph(n, std::move(edges), std::move(triangles));
    } catch (const Error& e) {
        throw Error(ErrorCode::parse, path + ": " + e.what());
    }
}

void save_hypergraph(const Hypergraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::io, "cannot write hypergraph file: " + path);
    out << "n " << g.n() << "\n";
    for (const auto& e : g.edges()) out << "e " << e[0] << " " << e[1] << "\n";
    for (const auto& t : g.triangles()) out << "t " << t[0] << " " << t[1] << " " << t[2] << "\n";
    if (!out) throw Error(ErrorCode::io, "write failed: " + path);
}

std::vector<double> load_omega(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::io, "cannot open frequency file: " + path);
    std::vector<double> omega;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string tok;
        if (!(ss >> tok) || tok[0] == '#') continue;
        try {
            std::size_t pos = 0;
            double v = std::stod(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument("trailing");
            omega.push_back(v);
        } catch (const std::exception&) {
            throw Error(ErrorCode::parse,
                        path + ":" + std::to_string(lineno) + ": bad frequency value '" + tok + "'");
        }
    }
    if (omega.empty()) throw Error(ErrorCode::parse, path + ": no frequency values");
    return omega;
}

}  // namespace hokm
