#include "ghw/io.hpp"

#include <fstream>
#include <sstream>

namespace ghw {

namespace {

Json optional_bool(const std::optional<bool>& v) {
    return v.has_value() ? Json(*v) : Json(nullptr);
}

}  // namespace

BinaryMatrix parse_matrix(std::string_view text, std::string_view source) {
    std::vector<BitWord> rows;
    int width = -1;
    int line_no = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    auto fail = [&](const std::string& why) {
        throw Error(ErrorKind::Parse, std::string(source) + ":" + std::to_string(line_no) + ": " + why);
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream tokens(line);
        std::string token;
        std::vector<int> entries;
        while (tokens >> token) {
            if (token != "0" && token != "1") fail("entry '" + token + "' is not 0 or 1");
            entries.push_back(token == "1" ? 1 : 0);
        }
        if (entries.empty()) continue;
        if (width < 0) {
            width = static_cast<int>(entries.size());
            if (width > kMaxWordLength) {
                throw Error(ErrorKind::LengthCapExceeded, std::string(source) + ":" + std::to_string(line_no) +
                                                              ": " + std::to_string(width) + " columns exceed " +
                                                              std::to_string(kMaxWordLength));
            }
        } else if (static_cast<int>(entries.size()) != width) {
            fail("row has " + std::to_string(entries.size()) + " entries, expected " + std::to_string(width));
        }
        BitWord row = BitWord::zero(width);
        for (int c = 0; c < width; ++c) {
            if (entries[static_cast<std::size_t>(c)] != 0) row = row.with(c);
        }
        rows.push_back(row);
    }
    if (rows.empty()) {
        line_no = std::max(line_no, 1);
        fail("matrix has no rows");
    }
    return BinaryMatrix(width, std::move(rows));
}

BinaryMatrix read_matrix_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, "cannot open matrix file " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_matrix(buffer.str(), path.string());
}

std::string format_matrix(const BinaryMatrix& m) {
    std::string out;
    for (BitWord row : m.row_span()) {
        for (int c = 0; c < m.cols(); ++c) {
            if (c != 0) out += ' ';
            out += row.test(c) ? '1' : '0';
        }
        out += '\n';
    }
    return out;
}

Json to_json(const BettiTable& t) {
    Json arr = Json::array();
    for (const auto& [key, value] : t.entries()) arr.push_back({{"i", key.first}, {"j", key.second}, {"beta", value}});
    return arr;
}

BettiTable betti_from_json(const Json& j) {
    BettiTable t;
    for (const auto& e : j) t.add(e.at("i").get<int>(), e.at("j").get<int>(), e.at("beta").get<std::uint64_t>());
    return t;
}

Json to_json(const TermOrder& o) {
    Json priority = Json::array();
    for (int v : o.priority()) priority.push_back(v + 1);
    return {{"kind", std::string(to_string(o.kind()))}, {"priority", priority}};
}

TermOrder order_from_json(const Json& j) {
    std::vector<int> priority;
    for (const auto& v : j.at("priority")) priority.push_back(v.get<int>() - 1);
    return {parse_order_kind(j.at("kind").get<std::string>()), std::move(priority)};
}

Json to_json(const std::vector<BitWord>& words) {
    Json arr = Json::array();
    for (BitWord w : words) arr.push_back(w.to_string());
    return arr;
}

Json to_json(const GroebnerBasis& g) {
    Json binomials = Json::array();
    for (const auto& b : g.binomials) {
        binomials.push_back({{"lead", b.lead.to_string()}, {"trail", b.trail.to_string()}, {"text", b.to_string()}});
    }
    return {{"order", to_json(g.order)},
            {"binomials", binomials},
            {"square_free_count", g.binomials.size()},
            {"quadric_count", g.quadric_count()},
            {"total_elements", g.total_size()}};
}

Json to_json(const VerificationReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        checks.push_back({{"name", c.name}, {"proven", c.proven}, {"passed", c.passed}, {"detail", c.detail}});
    }
    Json witness = nullptr;
    if (r.witness) {
        witness = {{"m1", r.witness->m1.to_string()}, {"m2", r.witness->m2.to_string()}, {"d2", r.witness->d2}};
    }
    return {{"code_id", r.code_id},
            {"order", to_json(r.order)},
            {"n", r.n},
            {"k", r.k},
            {"ghw", r.ghw_true.values},
            {"minshift_full", r.minshift_full},
            {"minshift_testset", r.minshift_testset},
            {"pd_testset", r.pd_testset},
            {"groebner_size", r.groebner_size},
            {"test_set", to_json(r.test_set)},
            {"witness", witness},
            {"conjecture_holds", r.conjecture_holds},
            {"third_weight_matches", optional_bool(r.third_weight_matches)},
            {"checks", checks},
            {"betti_full", to_json(r.betti_full)},
            {"betti_testset", to_json(r.betti_testset)}};
}

Json to_json(const SearchReport& r) {
    Json orders = Json::array();
    for (const auto& o : r.config.orders) orders.push_back(to_json(o));
    Json flagged = Json::array();
    for (const auto& f : r.flagged) {
        flagged.push_back({{"source", f.source},
                           {"index", f.index},
                           {"generator", f.generator},
                           {"order", to_json(f.order)},
                           {"ghw", f.ghw},
                           {"minshift_testset", f.minshift_testset},
                           {"pd_testset", f.pd_testset},
                           {"k", f.k},
                           {"pd_below_k", f.pd_testset < f.k},
                           {"third_weight_matches", optional_bool(f.third_weight_matches)}});
    }
    return {{"config",
             {{"n", r.config.n},
              {"k", r.config.k},
              {"trials", r.config.trials},
              {"seed", r.config.seed},
              {"orders", orders},
              {"random_orders", r.config.random_orders},
              {"fixtures", r.config.fixtures.size()}}},
            {"codes_examined", r.codes_examined},
            {"rank_rejections", r.rank_rejections},
            {"degenerate_skipped", r.degenerate_skipped},
            {"reports", r.reports},
            {"mismatches", r.mismatches},
            {"mismatches_with_pd_below_k", r.mismatches_with_pd_below_k},
            {"pd_equal_k_mismatches", r.pd_equal_k_mismatches},
            {"third_weight_failures", r.third_weight_failures},
            {"flagged", flagged}};
}

ResultDocument::ResultDocument(std::string_view command) {
    doc_["schema_version"] = kSchemaVersion;
    doc_["tool"] = "ghwtool";
    doc_["tool_version"] = std::string(kToolVersion);
    doc_["command"] = std::string(command);
}

ResultDocument ResultDocument::parse(std::string_view text) {
    ResultDocument d;
    try {
        d.doc_ = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("result document: ") + e.what());
    }
    if (!d.doc_.contains("schema_version") || d.doc_.at("schema_version") != kSchemaVersion) {
        throw Error(ErrorKind::Parse, "result document has an unsupported schema version");
    }
    return d;
}

void ResultDocument::set_timing(const std::string& name, double milliseconds) {
    doc_["timings"][name] = milliseconds;
}

Json ResultDocument::comparable() const {
    Json copy = doc_;
    copy.erase("timings");
    return copy;
}

}  // namespace ghw
