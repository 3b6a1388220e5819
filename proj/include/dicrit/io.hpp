#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "dicrit/digraph.hpp"

namespace dicrit {

// Canonical text interchange format:
//   line 1 (first non-comment line): `n <N>`
//   then one arc per line: `<u> <v>`, 0-based
//   `#` starts a comment line; blank lines are ignored
// Writers emit arcs sorted lexicographically, so write(read(write(D)))
// round-trips bit-exactly.

inline Digraph read_digraph(std::istream& is) {
    std::string line;
    int n = -1;
    std::vector<Arc> arcs;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        std::istringstream ls(line);
        if (n < 0) {
            std::string tag;
            ls >> tag >> n;
            if (tag != "n" || ls.fail() || n < 0)
                throw ParseError("expected `n <N>` header at line " +
                                 std::to_string(lineno));
            continue;
        }
        int u, v;
        ls >> u >> v;
        if (ls.fail())
            throw ParseError("expected `<u> <v>` arc at line " +
                             std::to_string(lineno));
        arcs.emplace_back(u, v);
    }
    if (n < 0) throw ParseError("missing `n <N>` header");
    return Digraph::from_arc_list(n, arcs);
}

inline Digraph read_digraph_from_string(const std::string& text) {
    std::istringstream is(text);
    return read_digraph(is);
}

inline void write_digraph(std::ostream& os, const Digraph& d) {
    os << "n " << d.n() << "\n";
    for (const auto& [u, v] : d.arcs()) os << u << " " << v << "\n";
}

inline std::string write_digraph_to_string(const Digraph& d) {
    std::ostringstream os;
    write_digraph(os, d);
    return os.str();
}

} // namespace dicrit
