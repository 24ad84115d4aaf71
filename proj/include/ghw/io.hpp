#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"

#include "ghw/analysis.hpp"
#include "ghw/betti.hpp"
#include "ghw/binary_matrix.hpp"
#include "ghw/groebner.hpp"
#include "ghw/term_order.hpp"

namespace ghw {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr std::string_view kToolVersion = "0.3.0";

/// Matrix file grammar: one row per line, entries "0"/"1" separated by
/// blanks; blank lines and everything after '#' ignored; rows of equal
/// length; at least one row. Errors carry the 1-based line number.
[[nodiscard]] BinaryMatrix parse_matrix(std::string_view text, std::string_view source = "<input>");
[[nodiscard]] BinaryMatrix read_matrix_file(const std::filesystem::path& path);
[[nodiscard]] std::string format_matrix(const BinaryMatrix& m);

[[nodiscard]] Json to_json(const BettiTable& t);
[[nodiscard]] BettiTable betti_from_json(const Json& j);
[[nodiscard]] Json to_json(const TermOrder& o);
[[nodiscard]] TermOrder order_from_json(const Json& j);
[[nodiscard]] Json to_json(const std::vector<BitWord>& words);
[[nodiscard]] Json to_json(const GroebnerBasis& g);
[[nodiscard]] Json to_json(const VerificationReport& r);
[[nodiscard]] Json to_json(const SearchReport& r);

/// One self-describing JSON document per run. Keys keep insertion order, so
/// a fixed command always serializes identically; wall-clock timings live
/// under "timings" and are the only nondeterministic field.
class ResultDocument {
public:
    explicit ResultDocument(std::string_view command);

    [[nodiscard]] static ResultDocument parse(std::string_view text);

    Json& operator[](const std::string& key) { return doc_[key]; }
    [[nodiscard]] const Json& json() const noexcept { return doc_; }
    [[nodiscard]] std::string command() const { return doc_.at("command").get<std::string>(); }

    void set_timing(const std::string& name, double milliseconds);
    /// The document with "timings" removed.
    [[nodiscard]] Json comparable() const;
    [[nodiscard]] std::string dump() const { return doc_.dump(2) + "\n"; }

private:
    ResultDocument() = default;
    Json doc_;
};

}  // namespace ghw
