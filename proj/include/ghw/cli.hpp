#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ghw/io.hpp"

namespace ghw::cli {

enum class Route { Oracle, Resolution, TestSet };
enum class IdealKind { StanleyReisner, TestSet, UnionTestSets };

struct OrderFlags {
    std::string kind = "degrevlex";
    /// 1-based variables, highest priority first; empty means 1 > 2 > ... > n.
    std::vector<int> vars;

    [[nodiscard]] TermOrder resolve(int n) const;
};

struct CommonFlags {
    OrderFlags order;
    unsigned threads = 1;
    int field_char = 2;
};

struct UnionFlags {
    /// Orders to sample when not exhaustive; 0 selects exhaustive for n <= 7.
    int sample_orders = 0;
    std::uint64_t seed = 0;
};

[[nodiscard]] ResultDocument cmd_ghw(const BinaryMatrix& m, Route route, const CommonFlags& flags);
[[nodiscard]] ResultDocument cmd_betti(const BinaryMatrix& m, IdealKind ideal, const CommonFlags& flags,
                                       const UnionFlags& union_flags = {});
[[nodiscard]] ResultDocument cmd_gb(const BinaryMatrix& m, const CommonFlags& flags);
[[nodiscard]] ResultDocument cmd_decode(const BinaryMatrix& m, const std::string& word, const CommonFlags& flags);
[[nodiscard]] ResultDocument cmd_verify(const BinaryMatrix& m, const CommonFlags& flags);
[[nodiscard]] ResultDocument cmd_search(const SearchConfig& config, int field_char);

/// Plain-text rendering of a document produced by one of the commands.
[[nodiscard]] std::string to_text(const ResultDocument& doc);

/// Full command-line entry point; returns the process exit code
/// (0 ok, 1 usage/parse, 2 cap exceeded, 3 proven-theorem violation).
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace ghw::cli
