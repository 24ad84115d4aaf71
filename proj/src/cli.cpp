#include "ghw/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

namespace ghw::cli {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Json code_json(const Code& c) {
    return {{"n", c.n()}, {"k", c.k()}, {"nondegenerate", c.nondegenerate()}};
}

HochsterOptions hochster(const CommonFlags& flags) {
    HochsterOptions o;
    o.threads = flags.threads;
    o.field_char = flags.field_char;
    return o;
}

std::string resolution_shape(const BettiTable& t) {
    const int pd = t.projective_dimension();
    std::vector<int> shifts;
    for (int i = 1; i <= pd; ++i) {
        int distinct = 0;
        int shift = 0;
        for (const auto& [key, value] : t.entries()) {
            if (key.first == i) {
                ++distinct;
                shift = key.second;
            }
        }
        if (distinct != 1) return "mixed";
        shifts.push_back(shift);
    }
    for (std::size_t i = 1; i < shifts.size(); ++i) {
        if (shifts[i] != shifts[i - 1] + 1) return "pure";
    }
    return "linear";
}

void put_betti(ResultDocument& doc, const BettiTable& t) {
    doc["betti"] = to_json(t);
    doc["diagram"] = render_betti_diagram(t);
    doc["projective_dimension"] = t.projective_dimension();
    doc["min_shifts"] = min_shifts(t);
    doc["resolution_shape"] = resolution_shape(t);
}

std::string join_ints(const Json& arr) {
    std::string out;
    for (const auto& v : arr) {
        if (!out.empty()) out += ' ';
        out += std::to_string(v.get<long long>());
    }
    return out;
}

std::vector<int> parse_vars(const std::string& text) {
    std::vector<int> vars;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(token, &used);
            if (token.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(token);
            vars.push_back(v);
        } catch (const std::exception&) {
            throw Error(ErrorKind::Usage, "bad variable list entry '" + token + "' in --vars");
        }
    }
    return vars;
}

}  // namespace

TermOrder OrderFlags::resolve(int n) const {
    const OrderKind k = parse_order_kind(kind);
    if (vars.empty()) return TermOrder::natural(k, n);
    if (static_cast<int>(vars.size()) != n) {
        throw Error(ErrorKind::Usage, "--vars lists " + std::to_string(vars.size()) + " variables, code length is " +
                                          std::to_string(n));
    }
    std::vector<int> priority;
    for (int v : vars) priority.push_back(v - 1);
    return {k, std::move(priority)};
}

ResultDocument cmd_ghw(const BinaryMatrix& m, Route route, const CommonFlags& flags) {
    const auto start = Clock::now();
    const Code code = Code::from_generator(m);
    ResultDocument doc("ghw");
    doc["code"] = code_json(code);
    doc["field_char"] = flags.field_char;
    switch (route) {
    case Route::Oracle:
        doc["route"] = "oracle";
        doc["ghw"] = ghw_sequence_bruteforce(code).values;
        break;
    case Route::Resolution: {
        doc["route"] = "resolution";
        const auto ideal = stanley_reisner_ideal(code);
        const auto table = betti_table_hochster(ideal, hochster(flags));
        doc["minimal_generators"] = ideal.size();
        doc["ghw"] = min_shifts(table);
        put_betti(doc, table);
        break;
    }
    case Route::TestSet: {
        doc["route"] = "testset";
        const TermOrder order = flags.order.resolve(code.n());
        doc["order"] = to_json(order);
        const auto gb = reduced_groebner_basis(code, order);
        const auto words = test_set(gb.basis);
        const auto table = betti_table_hochster(ideal_from_supports(code.n(), words), hochster(flags));
        const auto shifts = min_shifts(table);
        Json bounds = Json::array();
        for (std::size_t i = 0; i < shifts.size() && static_cast<int>(i) < code.k(); ++i) {
            bounds.push_back({{"i", i + 1}, {"value", shifts[i]}, {"exact", i < 2}});
        }
        doc["test_set"] = to_json(words);
        doc["ghw_bounds"] = bounds;
        Json notes = Json::array();
        if (table.projective_dimension() < code.k()) {
            notes.push_back("pd(R/M) = " + std::to_string(table.projective_dimension()) + " < k = " +
                            std::to_string(code.k()) + ": no bound for i > " +
                            std::to_string(table.projective_dimension()));
        }
        doc["notes"] = notes;
        put_betti(doc, table);
        break;
    }
    }
    doc.set_timing("total_ms", elapsed_ms(start));
    return doc;
}

ResultDocument cmd_betti(const BinaryMatrix& m, IdealKind ideal_kind, const CommonFlags& flags,
                         const UnionFlags& union_flags) {
    const auto start = Clock::now();
    const Code code = Code::from_generator(m);
    ResultDocument doc("betti");
    doc["code"] = code_json(code);
    doc["field_char"] = flags.field_char;
    std::optional<MonomialIdeal> ideal;
    switch (ideal_kind) {
    case IdealKind::StanleyReisner:
        doc["ideal"] = "stanley-reisner";
        ideal = stanley_reisner_ideal(code);
        break;
    case IdealKind::TestSet: {
        doc["ideal"] = "testset";
        const TermOrder order = flags.order.resolve(code.n());
        doc["order"] = to_json(order);
        ideal = testset_ideal(code, order);
        break;
    }
    case IdealKind::UnionTestSets: {
        doc["ideal"] = "union-testsets";
        std::vector<TermOrder> orders;
        if (union_flags.sample_orders == 0 && code.n() <= 7) {
            orders = all_priority_orders(code.n());
            doc["order_selection"] = "exhaustive";
        } else {
            const int count = union_flags.sample_orders > 0 ? union_flags.sample_orders : 100;
            orders = random_orders(code.n(), count, union_flags.seed, 0);
            doc["order_selection"] = "sampled";
            doc["seed"] = union_flags.seed;
        }
        doc["orders_used"] = orders.size();
        ideal = union_testsets(code, orders);
        break;
    }
    }
    doc["generators"] = to_json(ideal->generators());
    put_betti(doc, betti_table_hochster(*ideal, hochster(flags)));
    doc.set_timing("total_ms", elapsed_ms(start));
    return doc;
}

ResultDocument cmd_gb(const BinaryMatrix& m, const CommonFlags& flags) {
    const auto start = Clock::now();
    const Code code = Code::from_generator(m);
    const TermOrder order = flags.order.resolve(code.n());
    const auto gb = reduced_groebner_basis(code, order);
    ResultDocument doc("gb");
    doc["code"] = code_json(code);
    doc["groebner_basis"] = to_json(gb.basis);
    doc["test_set"] = to_json(test_set(gb.basis));
    doc.set_timing("total_ms", elapsed_ms(start));
    return doc;
}

ResultDocument cmd_decode(const BinaryMatrix& m, const std::string& word_text, const CommonFlags& flags) {
    const auto start = Clock::now();
    const Code code = Code::from_generator(m);
    const BitWord word = BitWord::parse(word_text);
    if (word.size() != code.n()) {
        throw Error(ErrorKind::LengthMismatch, "word has length " + std::to_string(word.size()) +
                                                   ", code length is " + std::to_string(code.n()));
    }
    const TermOrder order = flags.order.resolve(code.n());
    const auto gb = reduced_groebner_basis(code, order);
    const BitWord leader = normal_form(gb.cosets, word);
    ResultDocument doc("decode");
    doc["code"] = code_json(code);
    doc["order"] = to_json(order);
    doc["word"] = word.to_string();
    doc["coset_leader"] = leader.to_string();
    doc["decoded"] = (word ^ leader).to_string();
    doc["error_weight"] = leader.weight();
    doc.set_timing("total_ms", elapsed_ms(start));
    return doc;
}

ResultDocument cmd_verify(const BinaryMatrix& m, const CommonFlags& flags) {
    const auto start = Clock::now();
    const Code code = Code::from_generator(m);
    const TermOrder order = flags.order.resolve(code.n());
    VerifyOptions options;
    options.hochster = hochster(flags);
    const auto report = verify_code(code, order, options);
    ResultDocument doc("verify");
    doc["code"] = code_json(code);
    doc["field_char"] = flags.field_char;
    doc["report"] = to_json(report);
    doc["diagram_full"] = render_betti_diagram(report.betti_full);
    doc["diagram_testset"] = render_betti_diagram(report.betti_testset);
    doc.set_timing("total_ms", elapsed_ms(start));
    return doc;
}

ResultDocument cmd_search(const SearchConfig& config, int field_char) {
    const auto start = Clock::now();
    SearchConfig c = config;
    c.hochster.field_char = field_char;
    const auto report = counterexample_search(c);
    ResultDocument doc("search");
    doc["field_char"] = field_char;
    doc["search"] = to_json(report);
    doc.set_timing("total_ms", elapsed_ms(start));
    return doc;
}

std::string to_text(const ResultDocument& doc) {
    const Json& j = doc.json();
    std::ostringstream out;
    const std::string cmd = doc.command();
    if (j.contains("code")) {
        out << "code: [" << j["code"]["n"] << "," << j["code"]["k"] << "]"
            << (j["code"]["nondegenerate"].get<bool>() ? "" : " (degenerate)") << "\n";
    }
    if (cmd == "ghw") {
        out << "route: " << j["route"].get<std::string>() << "\n";
        if (j.contains("ghw_bounds")) {
            std::string line;
            for (const auto& b : j["ghw_bounds"]) {
                if (!line.empty()) line += ' ';
                line += (b["exact"].get<bool>() ? "" : "≤") + std::to_string(b["value"].get<int>());
            }
            out << "ghw: " << line << "\n";
            for (const auto& note : j["notes"]) out << "note: " << note.get<std::string>() << "\n";
        } else {
            out << "ghw: " << join_ints(j["ghw"]) << "\n";
        }
        if (j.contains("diagram")) out << j["diagram"].get<std::string>();
    } else if (cmd == "betti") {
        out << "ideal: " << j["ideal"].get<std::string>() << " (" << j["generators"].size() << " generators)\n";
        if (j.contains("orders_used")) {
            out << "orders: " << j["orders_used"] << " (" << j["order_selection"].get<std::string>() << ")\n";
        }
        out << j["diagram"].get<std::string>();
        out << "min shifts: " << join_ints(j["min_shifts"]) << "\n";
        out << "projective dimension: " << j["projective_dimension"] << "\n";
        out << "resolution: " << j["resolution_shape"].get<std::string>() << "\n";
    } else if (cmd == "gb") {
        const auto& gb = j["groebner_basis"];
        for (const auto& b : gb["binomials"]) out << "  " << b["text"].get<std::string>() << "\n";
        out << "square-free binomials: " << gb["square_free_count"] << "\n";
        out << "quadrics x_i^2 - 1: " << gb["quadric_count"] << "\n";
        out << "elements: " << gb["total_elements"] << "\n";
        out << "test set (" << j["test_set"].size() << "):";
        for (const auto& w : j["test_set"]) out << ' ' << w.get<std::string>();
        out << "\n";
    } else if (cmd == "decode") {
        out << "word:         " << j["word"].get<std::string>() << "\n";
        out << "coset leader: " << j["coset_leader"].get<std::string>() << "\n";
        out << "decoded:      " << j["decoded"].get<std::string>() << "\n";
        out << "error weight: " << j["error_weight"] << "\n";
    } else if (cmd == "verify") {
        const auto& r = j["report"];
        out << "order: " << order_from_json(r["order"]).describe() << "\n";
        out << "ghw:              " << join_ints(r["ghw"]) << "\n";
        out << "min shifts I_D:   " << join_ints(r["minshift_full"]) << "\n";
        out << "min shifts R/M:   " << join_ints(r["minshift_testset"]) << "\n";
        out << "pd(R/M): " << r["pd_testset"] << ", test set size " << r["test_set"].size() << "\n";
        for (const auto& c : r["checks"]) {
            out << (c["passed"].get<bool>() ? "  [ok]   " : (c["proven"].get<bool>() ? "  [FAIL] " : "  [no]   "))
                << c["name"].get<std::string>() << (c["proven"].get<bool>() ? "" : " (conjecture)") << ": "
                << c["detail"].get<std::string>() << "\n";
        }
    } else if (cmd == "search") {
        const auto& s = j["search"];
        out << "codes examined: " << s["codes_examined"] << " (" << s["reports"] << " code/order pairs, "
            << s["rank_rejections"] << " rank rejections, " << s["degenerate_skipped"] << " degenerate skipped)\n";
        out << "sequence mismatches: " << s["mismatches"] << " (pd < k: " << s["mismatches_with_pd_below_k"]
            << ", pd = k: " << s["pd_equal_k_mismatches"] << ")\n";
        out << "d3 mismatches: " << s["third_weight_failures"] << "\n";
        for (const auto& f : s["flagged"]) {
            out << "flagged " << f["source"].get<std::string>() << " #" << f["index"] << " under "
                << order_from_json(f["order"]).describe() << ": ghw " << join_ints(f["ghw"]) << ", R/M "
                << join_ints(f["minshift_testset"]) << ", pd " << f["pd_testset"] << "\n";
            for (const auto& row : f["generator"]) out << "    " << row.get<std::string>() << "\n";
        }
    }
    return out.str();
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generalized Hamming weights of binary linear codes"};
    app.require_subcommand(1);

    CommonFlags flags;
    bool json = false;
    std::string output;
    std::string vars_text;
    auto add_common = [&](CLI::App* sub, bool with_order) {
        sub->add_flag("--json", json, "Print the result document as JSON");
        sub->add_option("-o,--output", output, "Also write the JSON result document to this file");
        sub->add_option("--threads", flags.threads, "Worker threads for Betti sweeps")->check(CLI::Range(1U, 256U));
        sub->add_option("--field-char", flags.field_char, "Coefficient field characteristic (prime)");
        if (with_order) {
            sub->add_option("--order", flags.order.kind, "deglex or degrevlex")
                ->check(CLI::IsMember({"deglex", "degrevlex"}));
            sub->add_option("--vars", vars_text, "Variable priority, highest first, e.g. \"6,5,4,3,2,1\"");
        }
    };

    std::string file;
    std::string route_text = "oracle";
    auto* ghw_cmd = app.add_subcommand("ghw", "Generalized Hamming weights");
    ghw_cmd->add_option("file", file, "Generator matrix file")->required();
    ghw_cmd->add_option("--route", route_text, "oracle, resolution or testset")
        ->check(CLI::IsMember({"oracle", "resolution", "testset"}));
    add_common(ghw_cmd, true);

    std::string ideal_text = "stanley-reisner";
    UnionFlags union_flags;
    auto* betti_cmd = app.add_subcommand("betti", "Graded Betti diagram of a monomial ideal of the code");
    betti_cmd->add_option("file", file, "Generator matrix file")->required();
    betti_cmd->add_option("--ideal", ideal_text, "stanley-reisner, testset or union-testsets")
        ->check(CLI::IsMember({"stanley-reisner", "testset", "union-testsets"}));
    betti_cmd->add_option("--sample-orders", union_flags.sample_orders,
                          "union-testsets: number of random orders (default: all orders when n <= 7)");
    betti_cmd->add_option("--seed", union_flags.seed, "union-testsets: sampling seed");
    add_common(betti_cmd, true);

    auto* gb_cmd = app.add_subcommand("gb", "Reduced Groebner basis of the code ideal and its test set");
    gb_cmd->add_option("file", file, "Generator matrix file")->required();
    add_common(gb_cmd, true);

    std::string word;
    auto* decode_cmd = app.add_subcommand("decode", "Decode a received word by coset-leader reduction");
    decode_cmd->add_option("file", file, "Generator matrix file")->required();
    decode_cmd->add_option("--word", word, "Received word, coordinate 1 leftmost")->required();
    add_common(decode_cmd, true);

    auto* verify_cmd = app.add_subcommand("verify", "Check every proven property on one code and order");
    verify_cmd->add_option("file", file, "Generator matrix file")->required();
    add_common(verify_cmd, true);

    SearchConfig search;
    std::vector<std::string> inject;
    auto* search_cmd = app.add_subcommand("search", "Random search for codes where the test set misses a GHW");
    search_cmd->add_option("--n", search.n, "Code length")->check(CLI::Range(1, kMaxWordLength));
    search_cmd->add_option("--k", search.k, "Code dimension")->check(CLI::PositiveNumber);
    search_cmd->add_option("--trials", search.trials, "Number of random codes");
    search_cmd->add_option("--seed", search.seed, "Random seed");
    search_cmd->add_option("--random-orders", search.random_orders, "Random orders per code");
    search_cmd->add_option("--inject", inject, "Extra generator matrix files examined first");
    add_common(search_cmd, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (!vars_text.empty()) flags.order.vars = parse_vars(vars_text);
        std::optional<ResultDocument> doc;
        if (*ghw_cmd) {
            const Route route = route_text == "oracle"       ? Route::Oracle
                                : route_text == "resolution" ? Route::Resolution
                                                             : Route::TestSet;
            doc = cmd_ghw(read_matrix_file(file), route, flags);
        } else if (*betti_cmd) {
            const IdealKind kind = ideal_text == "stanley-reisner" ? IdealKind::StanleyReisner
                                   : ideal_text == "testset"       ? IdealKind::TestSet
                                                                   : IdealKind::UnionTestSets;
            doc = cmd_betti(read_matrix_file(file), kind, flags, union_flags);
        } else if (*gb_cmd) {
            doc = cmd_gb(read_matrix_file(file), flags);
        } else if (*decode_cmd) {
            doc = cmd_decode(read_matrix_file(file), word, flags);
        } else if (*verify_cmd) {
            doc = cmd_verify(read_matrix_file(file), flags);
        } else if (*search_cmd) {
            if (search.k > search.n) throw Error(ErrorKind::Usage, "--k must not exceed --n");
            require_within_cap(search.n, "search");
            const bool explicit_order = search_cmd->count("--order") > 0 || search_cmd->count("--vars") > 0;
            if (explicit_order) search.orders.push_back(flags.order.resolve(search.n));
            for (const auto& path : inject) search.fixtures.push_back(read_matrix_file(path));
            search.threads = flags.threads;
            doc = cmd_search(search, flags.field_char);
        }
        if (!output.empty()) {
            std::ofstream file_out(output);
            if (!file_out) throw Error(ErrorKind::Usage, "cannot write " + output);
            file_out << doc->dump();
        }
        out << (json ? doc->dump() : to_text(*doc));
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code(e.kind());
    }
}

}  // namespace ghw::cli
