#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "tropical/matrix.hpp"

namespace testutil {

// Compact matrix literals: rows separated by ';', entries by spaces,
// "-inf" for BOTTOM, rationals as "p/q" or decimals.
inline tropical::Scalar scalar_of(const std::string& tok) {
    if (tok == "-inf") return tropical::Scalar::bottom();
    return tropical::Scalar(tropical::Rational::parse(tok));
}

inline std::vector<tropical::Scalar> vec(const std::string& text) {
    std::vector<tropical::Scalar> out;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) out.push_back(scalar_of(tok));
    return out;
}

inline tropical::Matrix mat(const std::string& text) {
    std::vector<std::vector<tropical::Scalar>> rows;
    std::string row;
    std::istringstream lines(text);
    while (std::getline(lines, row, ';')) rows.push_back(vec(row));
    tropical::Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

inline std::string str(const std::vector<tropical::Scalar>& v) {
    std::string s;
    for (const auto& x : v) s += x.str() + " ";
    return s;
}

}  // namespace testutil
