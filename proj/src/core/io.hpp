#pragma once

#include <string>
#include <vector>

#include "core/hypergraph.hpp"

namespace hokm {

/// Plain-text hypergraph format:
///   n <count>
///   e i j        (one line per edge, 0-based, ascending)
///   t i j k      (one line per triangle, 0-based, ascending)
/// Blank lines and '#' comment lines are ignored. The loader rejects
/// duplicates, self-pairs and degenerate triples.
Hypergraph load_hypergraph(const std::string& path);
void save_hypergraph(const Hypergraph& g, const std::string& path);

/// Natural-frequency vector, one value per line.
std::vector<double> load_omega(const std::string& path);

}  // namespace hokm
