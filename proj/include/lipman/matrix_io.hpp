#pragma once

// Plain-text matrix format: first non-comment line is n, followed by n rows
// of n space-separated integers.  Lines starting with '#' are comments;
// blank lines are skipped.

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "lipman/errors.hpp"
#include "lipman/int_matrix.hpp"

namespace lipman {

namespace detail {

inline bool parse_int_token(const std::string& tok, Int& out) {
    // mpz accepts an optional sign followed by digits; reject anything else
    if (tok.empty()) return false;
    std::size_t start = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
    if (start == tok.size()) return false;
    for (std::size_t i = start; i < tok.size(); ++i)
        if (tok[i] < '0' || tok[i] > '9') return false;
    out = Int(tok);
    return true;
}

}  // namespace detail

inline IntMatrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    long n = -1;
    std::vector<IntVector> rows;

    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;           // blank
        if (line[first] == '#') continue;                   // comment
        std::istringstream ls(line);
        if (n < 0) {
            std::string tok;
            ls >> tok;
            Int parsed;
            if (!detail::parse_int_token(tok, parsed) || parsed < 1)
                throw ParseError(lineno, "expected the dimension n >= 1, got '" +
                                             tok + "'");
            if (parsed > 4096)
                throw ParseError(lineno, "dimension too large: " + parsed.get_str());
            n = static_cast<long>(parsed.get_si());
            std::string extra;
            if (ls >> extra)
                throw ParseError(lineno, "unexpected token after dimension: '" +
                                             extra + "'");
            continue;
        }
        if (rows.size() == static_cast<std::size_t>(n))
            throw ParseError(lineno, "unexpected content after the matrix");
        IntVector row;
        std::string tok;
        while (ls >> tok) {
            Int v;
            if (!detail::parse_int_token(tok, v))
                throw ParseError(lineno, "not an integer: '" + tok + "'");
            row.push_back(std::move(v));
        }
        if (row.size() != static_cast<std::size_t>(n))
            throw ParseError(lineno, "row has " + std::to_string(row.size()) +
                                         " entries, expected " + std::to_string(n));
        rows.push_back(std::move(row));
    }
    if (n < 0) throw ParseError(lineno, "empty input, expected the dimension n");
    if (rows.size() != static_cast<std::size_t>(n))
        throw DimensionMismatchError("expected " + std::to_string(n) +
                                     " rows, got " + std::to_string(rows.size()));
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i)
        for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j)
            m(i, j) = std::move(rows[i][j]);
    return m;
}

inline IntMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_matrix(buf.str());
}

}  // namespace lipman
