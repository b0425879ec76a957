#include "conn2k/io.hpp"

#include <fstream>
#include <sstream>
#include <string>

namespace conn2k {

namespace {

constexpr Capacity kMaxEdgeCapacity = Capacity{1} << 32;

} // namespace

CapGraph parse_instance(std::istream& in) {
    std::string line;
    long long n = -1, m = -1;
    // comments, then the single header line
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tag, fmt;
        if (!(ls >> tag >> fmt >> n >> m) || tag != "p" || fmt != "caug")
            throw ParseError("expected header 'p caug <n> <m>', got: " + line);
        std::string rest;
        if (ls >> rest) throw ParseError("trailing tokens in header: " + line);
        break;
    }
    if (n < 0) throw ParseError("missing 'p caug' header");
    if (n < 1) throw ParseError("vertex count must be at least 1");
    if (m < 0) throw ParseError("negative edge count");

    CapGraph g(static_cast<int>(n));
    long long seen = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tag;
        long long u, v, cap;
        if (!(ls >> tag >> u >> v >> cap) || tag != "e")
            throw ParseError("expected edge line 'e <u> <v> <cap>', got: " + line);
        std::string rest;
        if (ls >> rest) throw ParseError("trailing tokens in edge line: " + line);
        if (u < 1 || u > n || v < 1 || v > n) throw ParseError("vertex id out of range in: " + line);
        if (u == v) throw ParseError("loop edge in: " + line);
        if (u > v) throw ParseError("edge endpoints must satisfy u < v in: " + line);
        if (cap < 1) throw ParseError("edge capacity must be at least 1 in: " + line);
        if (cap > kMaxEdgeCapacity) throw ParseError("edge capacity exceeds 2^32 in: " + line);
        int u0 = static_cast<int>(u - 1), v0 = static_cast<int>(v - 1);
        if (g.capacity(u0, v0) != 0) throw ParseError("duplicate edge pair in: " + line);
        g.add_capacity(u0, v0, cap);
        ++seen;
    }
    if (seen != m)
        throw ParseError("edge count mismatch: header says " + std::to_string(m) + ", file has " +
                         std::to_string(seen));
    return g;
}

CapGraph parse_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    return parse_instance(in);
}

void write_instance(std::ostream& out, const CapGraph& g) {
    out << "p caug " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto& [u, v, c] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << ' ' << c << '\n';
}

} // namespace conn2k
