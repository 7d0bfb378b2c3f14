// stepseq: generate, verify, transform, enumerate and benchmark stepping
// sequences through nested set chains, and derive Gray codes from them.
//
// Exit codes: 0 success/valid, 1 semantic failure (invalid sequence),
// 2 usage or parse error, 3 resource limit.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"

#include "stepseq/core.hpp"
#include "stepseq/generators.hpp"
#include "stepseq/graycode.hpp"
#include "stepseq/search.hpp"
#include "stepseq/text.hpp"
#include "stepseq/transforms.hpp"

namespace {

using namespace stepseq;

constexpr int kExitValid = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

// output redirection for the emitting subcommands
struct Sink {
    std::ofstream file;
    std::ostream* out = &std::cout;

    void open(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw std::runtime_error("cannot open output file: " + path);
        out = &file;
    }
    std::ostream& stream() { return *out; }
};

std::vector<std::string> read_lines(const std::string& path) {
    std::vector<std::string> lines;
    std::string line;
    if (path.empty()) {
        while (std::getline(std::cin, line)) lines.push_back(line);
    } else {
        std::ifstream in(path);
        if (!in) throw ParseError("cannot open input file: " + path);
        while (std::getline(in, line)) lines.push_back(line);
    }
    if (lines.empty()) lines.push_back(""); // empty input = one empty sequence
    return lines;
}

int per_method_limit(const std::string& method, int flag_value) {
    if (flag_value > 0) return flag_value;
    return (method == "greedy" || method == "humble") ? kDefaultGreedyLimit
                                                      : kDefaultMaterializeLimit;
}

int cmd_generate(int m, const std::string& method, bool stream, int limit_flag,
                 const std::string& output) {
    Sink sink;
    sink.open(output);
    std::ostream& out = sink.stream();

    if (stream) {
        if (method != "for-c" && method != "for-j") {
            std::cerr << "generate: --stream requires --method for-c or for-j\n";
            return kExitUsage;
        }
        std::unique_ptr<MoveStream> moves =
            method == "for-c" ? stream_for_c(m) : stream_for_j(m);
        bool first = true;
        while (auto mv = moves->next()) {
            if (!first) out << ' ';
            out << *mv;
            first = false;
        }
        out << '\n';
        return kExitValid;
    }

    const int limit = per_method_limit(method, limit_flag);
    SteppingSequence seq;
    if (method == "recursive") {
        seq = recursive_r(m, limit);
    } else if (method == "greedy") {
        seq = greedy(m, limit);
    } else if (method == "humble") {
        seq = humble(m, limit);
    } else if (method == "for-c") {
        auto s = stream_for_c(m);
        seq = drain(*s, limit);
    } else {
        auto s = stream_for_j(m);
        seq = drain(*s, limit);
    }
    out << format_moves(seq) << '\n';
    return kExitValid;
}

void describe(const VerificationReport& report, std::ostream& out, int m) {
    if (report.valid) {
        out << "valid\n";
        return;
    }
    out << "invalid: " << to_string(*report.reason);
    if (report.failure_step) out << " at step " << *report.failure_step;
    if (report.reason == FailureReason::WrongLength) {
        out << " (expected " << stepping_length(m) << " moves)";
    }
    if (report.repeated_subset) {
        out << " (subset " << format_mask_binary(*report.repeated_subset, m) << ")";
    }
    out << '\n';
}

int cmd_verify(int m, const std::string& input, int limit) {
    bool all_valid = true;
    for (const std::string& line : read_lines(input)) {
        const SteppingSequence seq = parse_moves(line, m);
        const VerificationReport report = verify(seq, limit);
        describe(report, std::cout, m);
        all_valid = all_valid && report.valid;
    }
    return all_valid ? kExitValid : kExitInvalid;
}

int cmd_enumerate(int m, bool contiguous, bool strong, bool count_only, int threads,
                  std::uint64_t budget, const std::string& output) {
    SearchConfig config;
    config.m = m;
    config.filter = strong ? Filter::StronglyContiguous
                           : contiguous ? Filter::Contiguous : Filter::All;
    config.mode = count_only ? Mode::Count : Mode::Collect;
    config.threads = threads;
    if (budget > 0) config.node_budget = budget;

    Sink sink;
    sink.open(output);
    const SearchResult result = enumerate(config);
    if (count_only) {
        sink.stream() << result.count << '\n';
    } else {
        for (const auto& seq : result.sequences) {
            sink.stream() << format_moves(seq) << '\n';
        }
    }
    return kExitValid;
}

int cmd_transform(int m, const std::string& op, const std::string& ops_csv,
                  const std::string& input, const std::string& output) {
    Sink sink;
    sink.open(output);
    std::ostream& out = sink.stream();

    std::vector<SteppingSequence> seqs;
    for (const std::string& line : read_lines(input)) {
        seqs.push_back(parse_moves(line, m));
    }

    if (op == "reverse" || op == "complement") {
        for (const auto& s : seqs) {
            out << format_moves(op == "reverse" ? reverse(s) : complement(s)) << '\n';
        }
    } else if (op == "commutations") {
        for (const auto& s : seqs) {
            for (const auto& neighbor : commutations(s)) {
                out << format_moves(neighbor) << '\n';
            }
        }
    } else { // orbit
        OrbitOps ops{false, false, false};
        std::stringstream csv(ops_csv);
        std::string item;
        while (std::getline(csv, item, ',')) {
            if (item == "reverse") ops.reverse = true;
            else if (item == "complement") ops.complement = true;
            else if (item == "commutation") ops.commutation = true;
            else throw ParseError("transform: unknown orbit op: " + item);
        }
        for (const auto& s : orbit_closure(seqs, ops)) {
            out << format_moves(s) << '\n';
        }
    }
    return kExitValid;
}

SteppingSequence input_or_canonical(int m, const std::string& input) {
    if (input.empty()) return recursive_r(m);
    return parse_moves(read_lines(input).front(), m);
}

int cmd_graycode(int m, const std::string& format, const std::string& input,
                 int verify_limit, const std::string& output) {
    const SteppingSequence seq = input_or_canonical(m, input);
    const GrayOrdering ordering = to_ordering(seq, verify_limit);
    Sink sink;
    sink.open(output);
    sink.stream() << format_ordering(ordering, format == "binary");
    return kExitValid;
}

int cmd_ksubsets(int m, int k, const std::string& input, int verify_limit,
                 const std::string& output) {
    const SteppingSequence seq = input_or_canonical(m, input);
    Sink sink;
    sink.open(output);
    sink.stream() << format_ksubsets(restrict_to_k(seq, k, verify_limit));
    return kExitValid;
}

int cmd_check_brgc(int m) {
    const auto violation = nesting_violation(brgc(m));
    if (!violation) {
        std::cout << "no violation\n";
        return kExitValid;
    }
    std::cout << "violation at position " << violation->position << ": word "
              << format_mask_binary(violation->word, m) << '\n';
    std::cout << "family:";
    for (Mask s : violation->family) std::cout << ' ' << format_subset(s);
    std::cout << '\n';
    return kExitValid;
}

int cmd_census_m4(bool list, const std::string& output) {
    const CensusM4 census = census_m4();
    Sink sink;
    sink.open(output);
    std::ostream& out = sink.stream();
    out << "total " << census.total << '\n';
    out << "combinator-products " << census.combinator_products.size() << '\n';
    out << "product-family " << census.product_family.size() << '\n';
    out << "remaining-family " << census.remaining_family.size() << '\n';
    out << "reverse-equals-complement " << census.reverse_equals_complement << '\n';
    out << "families-disjoint " << (census.families_disjoint ? "true" : "false") << '\n';
    out << "families-cover-all " << (census.families_cover_all ? "true" : "false") << '\n';
    if (list) {
        for (const auto& s : census.all) out << format_moves(s) << '\n';
    }
    return kExitValid;
}

int cmd_bench(int m, int limit_flag) {
    const int limit = limit_flag > 0 ? limit_flag : kDefaultMaterializeLimit;
    using clock = std::chrono::steady_clock;

    auto report = [&](const char* name, std::uint64_t tokens, double seconds) {
        std::cout << name << ": " << tokens << " tokens in " << seconds << " s ("
                  << static_cast<std::uint64_t>(tokens / seconds) << " tokens/s)\n";
    };

    {
        const auto start = clock::now();
        const SteppingSequence seq = recursive_r(m, limit);
        const std::chrono::duration<double> dt = clock::now() - start;
        report("recursive", seq.moves.size(), dt.count());
    }
    for (const char* name : {"for-c", "for-j"}) {
        const auto start = clock::now();
        std::unique_ptr<MoveStream> stream =
            std::string(name) == "for-c" ? stream_for_c(m) : stream_for_j(m);
        while (stream->next()) {
        }
        const std::chrono::duration<double> dt = clock::now() - start;
        report(name, stream->emitted(), dt.count());
    }
    return kExitValid;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"stepping sequences through nested set chains"};
    app.require_subcommand(1);

    std::function<int()> action;

    // generate
    auto* generate = app.add_subcommand("generate", "emit a canonical stepping sequence");
    int gen_m = 4;
    std::string gen_method = "recursive";
    bool gen_stream = false;
    int gen_limit = 0;
    std::string gen_output;
    generate->add_option("--m", gen_m, "chain length")->required();
    generate->add_option("--method", gen_method, "construction method")
        ->check(CLI::IsMember({"recursive", "greedy", "humble", "for-c", "for-j"}));
    generate->add_flag("--stream", gen_stream, "emit incrementally (for-c / for-j)");
    generate->add_option("--limit-materialize", gen_limit, "override the size limit");
    generate->add_option("--output", gen_output, "write to a file instead of stdout");
    generate->callback([&]() {
        action = [&]() {
            return cmd_generate(gen_m, gen_method, gen_stream, gen_limit, gen_output);
        };
    });

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "check sequences from stdin or a file");
    int ver_m = 0;
    std::string ver_input;
    int ver_limit = kDefaultVerifyLimit;
    verify_cmd->add_option("--m", ver_m, "chain length")->required();
    verify_cmd->add_option("--input", ver_input, "input file (default stdin)");
    verify_cmd->add_option("--limit-verify", ver_limit, "override the verification limit");
    verify_cmd->callback([&]() {
        action = [&]() { return cmd_verify(ver_m, ver_input, ver_limit); };
    });

    // enumerate
    auto* enum_cmd = app.add_subcommand("enumerate", "exhaustive backtracking search");
    int enum_m = 4;
    bool enum_contiguous = false;
    bool enum_strong = false;
    bool enum_count_only = false;
    int enum_threads = 1;
    std::uint64_t enum_budget = 0;
    std::string enum_output;
    enum_cmd->add_option("--m", enum_m, "chain length")->required();
    enum_cmd->add_flag("--contiguous", enum_contiguous, "only contiguous sequences");
    enum_cmd->add_flag("--strong", enum_strong, "only strongly contiguous sequences");
    enum_cmd->add_flag("--count-only", enum_count_only, "print the count, not the list");
    enum_cmd->add_option("--threads", enum_threads, "worker threads");
    enum_cmd->add_option("--budget", enum_budget,
                         "node budget; also unlocks m past the feasibility default");
    enum_cmd->add_option("--output", enum_output, "write to a file instead of stdout");
    enum_cmd->callback([&]() {
        action = [&]() {
            if (enum_contiguous && enum_strong) {
                std::cerr << "enumerate: --contiguous and --strong are exclusive\n";
                return kExitUsage;
            }
            return cmd_enumerate(enum_m, enum_contiguous, enum_strong, enum_count_only,
                                 enum_threads, enum_budget, enum_output);
        };
    });

    // transform
    auto* transform = app.add_subcommand("transform", "apply a symmetry to input sequences");
    int tra_m = 0;
    std::string tra_op;
    std::string tra_ops = "reverse,complement,commutation";
    std::string tra_input;
    std::string tra_output;
    transform->add_option("--m", tra_m, "chain length")->required();
    transform->add_option("--op", tra_op, "operation")
        ->required()
        ->check(CLI::IsMember({"reverse", "complement", "commutations", "orbit"}));
    transform->add_option("--ops", tra_ops, "orbit closure operations (comma separated)");
    transform->add_option("--input", tra_input, "input file (default stdin)");
    transform->add_option("--output", tra_output, "write to a file instead of stdout");
    transform->callback([&]() {
        action = [&]() { return cmd_transform(tra_m, tra_op, tra_ops, tra_input, tra_output); };
    });

    // graycode
    auto* graycode = app.add_subcommand("graycode", "the induced ordering of all m-bit words");
    int gray_m = 4;
    std::string gray_format = "binary";
    std::string gray_input;
    int gray_limit = kDefaultVerifyLimit;
    std::string gray_output;
    graycode->add_option("--m", gray_m, "chain length")->required();
    graycode->add_option("--format", gray_format, "binary or decimal")
        ->check(CLI::IsMember({"binary", "decimal"}));
    graycode->add_option("--input", gray_input, "sequence file (default: canonical)");
    graycode->add_option("--limit-verify", gray_limit, "override the verification limit");
    graycode->add_option("--output", gray_output, "write to a file instead of stdout");
    graycode->callback([&]() {
        action = [&]() {
            return cmd_graycode(gray_m, gray_format, gray_input, gray_limit, gray_output);
        };
    });

    // ksubsets
    auto* ksubsets = app.add_subcommand("ksubsets", "the induced ordering of k-element subsets");
    int ksub_m = 6;
    int ksub_k = 2;
    std::string ksub_input;
    int ksub_limit = kDefaultVerifyLimit;
    std::string ksub_output;
    ksubsets->add_option("--m", ksub_m, "chain length")->required();
    ksubsets->add_option("--k", ksub_k, "subset cardinality")->required();
    ksubsets->add_option("--input", ksub_input, "sequence file (default: canonical)");
    ksubsets->add_option("--limit-verify", ksub_limit, "override the verification limit");
    ksubsets->add_option("--output", ksub_output, "write to a file instead of stdout");
    ksubsets->callback([&]() {
        action = [&]() {
            return cmd_ksubsets(ksub_m, ksub_k, ksub_input, ksub_limit, ksub_output);
        };
    });

    // check-brgc
    auto* brgc_cmd = app.add_subcommand(
        "check-brgc", "where the reflected Gray code breaks the nesting chain");
    int brgc_m = 3;
    brgc_cmd->add_option("--m", brgc_m, "word width")->required();
    brgc_cmd->callback([&]() {
        action = [&]() { return cmd_check_brgc(brgc_m); };
    });

    // census-m4
    auto* census = app.add_subcommand("census-m4", "the full m=4 population breakdown");
    bool census_list = false;
    std::string census_output;
    census->add_flag("--list", census_list, "also list all 34 sequences");
    census->add_option("--output", census_output, "write to a file instead of stdout");
    census->callback([&]() {
        action = [&]() { return cmd_census_m4(census_list, census_output); };
    });

    // bench
    auto* bench = app.add_subcommand("bench", "token throughput of the three generators");
    int bench_m = 20;
    int bench_limit = 0;
    bench->add_option("--m", bench_m, "chain length")->required();
    bench->add_option("--limit-materialize", bench_limit, "override the size limit");
    bench->callback([&]() {
        action = [&]() { return cmd_bench(bench_m, bench_limit); };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        return action();
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const BudgetExhaustedError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitResource;
    } catch (const ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitResource;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
}
