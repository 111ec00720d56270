#pragma once

#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qtop/fin_space.hpp"
#include "qtop/monoid.hpp"

namespace qtop {

/// One parsed QTOP file: exactly one SPACE or one MONOID block.
struct QtopDocument {
    std::optional<FinSpace> space;
    std::optional<TopMonoid> monoid;

    const FinSpace& anySpace() const { return monoid ? monoid->space() : *space; }
};

namespace detail {

struct LineReader {
    std::istream& in;
    int lineNo = 0;

    /// Next non-blank line, trimmed of trailing whitespace.
    std::optional<std::string> next() {
        std::string line;
        while (std::getline(in, line)) {
            ++lineNo;
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ' ||
                                     line.back() == '\t'))
                line.pop_back();
            if (!line.empty()) return line;
        }
        return std::nullopt;
    }

    std::string require(const char* what) {
        auto line = next();
        if (!line) throw ParseError(lineNo, std::string("unexpected end of file, expected ") + what);
        return *line;
    }
};

inline int parseHeaderInt(const std::string& line, const std::string& key, int lineNo) {
    std::size_t pos = line.find(key + "=");
    if (pos == std::string::npos)
        throw ParseError(lineNo, "header is missing '" + key + "='");
    pos += key.size() + 1;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ') ++end;
    try {
        return std::stoi(line.substr(pos, end - pos));
    } catch (...) {
        throw ParseError(lineNo, "bad integer for '" + key + "'");
    }
}

inline FinSpace parseSpaceBody(LineReader& r, int n) {
    std::string section = r.require("OPENS or PREORDER");
    if (section == "PREORDER") {
        std::vector<std::string> rows;
        int first = r.lineNo + 1;
        for (int i = 0; i < n; ++i) rows.push_back(r.require("relation row"));
        std::string end = r.require("END");
        if (end != "END") throw ParseError(r.lineNo, "expected END after PREORDER rows");
        Relation m = Relation::fromText(rows, first);
        if (!m.isPreorder())
            throw ParseError(first, "PREORDER section is not transitive");
        return FinSpace(m);
    }
    if (section == "OPENS") {
        std::vector<PointSet> opens;
        while (true) {
            std::string line = r.require("open set or END");
            if (line == "END") break;
            try {
                opens.push_back(PointSet::parse(line, n));
            } catch (const ParseError& e) {
                throw ParseError(r.lineNo, e.what());
            }
        }
        try {
            return FinSpace::fromOpens(n, opens);
        } catch (const InvalidTopologyError& e) {
            throw ParseError(r.lineNo, e.what());
        }
    }
    throw ParseError(r.lineNo, "expected OPENS or PREORDER, got '" + section + "'");
}

}  // namespace detail

inline QtopDocument parseQtop(std::istream& in) {
    detail::LineReader r{in};
    std::string header = r.require("SPACE or MONOID header");
    QtopDocument doc;
    if (header.rfind("SPACE", 0) == 0) {
        int n = detail::parseHeaderInt(header, "n", r.lineNo);
        if (n < 1 || n > kMaxPoints)
            throw ParseError(r.lineNo, "carrier size outside 1.." + std::to_string(kMaxPoints));
        doc.space = detail::parseSpaceBody(r, n);
    } else if (header.rfind("MONOID", 0) == 0) {
        int n = detail::parseHeaderInt(header, "n", r.lineNo);
        int unit = detail::parseHeaderInt(header, "unit", r.lineNo);
        if (n < 1 || n > kMaxPoints)
            throw ParseError(r.lineNo, "carrier size outside 1.." + std::to_string(kMaxPoints));
        if (unit < 0 || unit >= n) throw ParseError(r.lineNo, "unit outside the carrier");
        std::string table = r.require("TABLE");
        if (table != "TABLE") throw ParseError(r.lineNo, "expected TABLE section");
        MonoidData data{n, std::vector<int>(static_cast<std::size_t>(n) * n, 0), unit};
        for (int i = 0; i < n; ++i) {
            std::string line = r.require("table row");
            std::istringstream row(line);
            for (int j = 0; j < n; ++j) {
                int v;
                if (!(row >> v)) throw ParseError(r.lineNo, "table row needs " +
                                                                std::to_string(n) + " integers");
                if (v < 0 || v >= n)
                    throw ParseError(r.lineNo, "table entry outside the carrier");
                data.table[i * n + j] = v;
            }
            int extra;
            if (row >> extra) throw ParseError(r.lineNo, "too many entries in table row");
        }
        if (auto defect = findMonoidDefect(data))
            throw ParseError(r.lineNo, "not a monoid: " + defect->describe());
        FinSpace space = detail::parseSpaceBody(r, n);
        doc.monoid = TopMonoid(data, std::move(space));
    } else {
        throw ParseError(r.lineNo, "expected a SPACE or MONOID header");
    }
    if (r.next()) throw ParseError(r.lineNo, "trailing content after END");
    return doc;
}

inline QtopDocument parseQtopFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    return parseQtop(in);
}

inline std::string dumpSpace(const FinSpace& s) {
    std::string out = "SPACE n=" + std::to_string(s.size()) + "\nPREORDER\n";
    out += s.minimalOpenRelation().toText();
    out += "END\n";
    return out;
}

inline std::string dumpMonoid(const TopMonoid& m) {
    std::string out = "MONOID n=" + std::to_string(m.size()) +
                      " unit=" + std::to_string(m.unit()) + "\nTABLE\n";
    for (int i = 0; i < m.size(); ++i) {
        for (int j = 0; j < m.size(); ++j) {
            if (j) out += ' ';
            out += std::to_string(m.mul(i, j));
        }
        out += '\n';
    }
    out += "PREORDER\n";
    out += m.space().minimalOpenRelation().toText();
    out += "END\n";
    return out;
}

}  // namespace qtop
