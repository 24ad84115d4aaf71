#pragma once

#include <string>
#include <vector>

#include "ghw/betti.hpp"
#include "ghw/code.hpp"
#include "ghw/io.hpp"

namespace fixtures {

inline ghw::BinaryMatrix matrix(const std::string& name) {
    return ghw::read_matrix_file(std::string(GHW_DATA_DIR) + "/" + name + ".txt");
}

inline ghw::Code code(const std::string& name) { return ghw::Code::from_generator(matrix(name)); }

inline std::string path(const std::string& name) { return std::string(GHW_DATA_DIR) + "/" + name + ".txt"; }

// Rows as printed in a Betti diagram: rows[r][i] = beta_{i, i + r}. Row 0 is implicit (the leading 1).
inline ghw::BettiTable diagram(const std::vector<std::vector<std::uint64_t>>& rows) {
    ghw::BettiTable t;
    t.add(0, 0, 1);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t i = 0; i < rows[r].size(); ++i) {
            if (rows[r][i] != 0) t.add(static_cast<int>(i), static_cast<int>(i + r + 1), rows[r][i]);
        }
    }
    return t;
}

// Diagram rows 1.. below; column 0 of each row is always 0.
inline ghw::BettiTable toy_full() { return diagram({{0, 1}, {0, 3, 2}, {0, 2, 7, 4}}); }
inline ghw::BettiTable toy_testset() { return diagram({{0, 1}, {0, 2, 1}, {0, 1, 4, 2}}); }

inline ghw::BettiTable c14_full() {
    return diagram({{0, 2},
                    {0, 8, 5},
                    {0, 34, 82, 48, 8},
                    {0, 52, 441, 897, 753, 289, 42},
                    {0, 51, 1345, 7410, 18309, 25248, 21008, 10579, 2990, 366}});
}

inline ghw::BettiTable c14_testset() {
    return diagram({{0, 2},
                    {0, 6, 3},
                    {0, 13, 38, 17, 2},
                    {0, 3, 92, 194, 130, 35, 3},
                    {0, 0, 83, 599, 1410, 1621, 1040, 378, 71, 5},
                    {0, 0, 0, 0, 2, 5, 4, 1}});
}

inline ghw::BettiTable c10_full() {
    return diagram({{0, 4}, {0, 18, 48, 32, 7}, {0, 20, 214, 637, 874, 637, 242, 38}});
}

inline ghw::BettiTable c10_testset() { return diagram({{0, 4}, {0, 4, 14, 5}, {0, 2, 23, 56, 48, 17, 2}}); }

inline ghw::BettiTable hamming_union() { return diagram({{}, {0, 7}, {0, 0, 21, 21, 6}}); }

}  // namespace fixtures
