// wkpc -- command line front end for the Watson-Crick PC automata simulator.
//
// Talks to the library exclusively through the C API. Exit codes:
//   0  ACCEPT / success
//   1  REJECT / invalid trace
//   2  usage or parse error
//   3  configuration budget exhausted

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "wkpc/wkpc.h"

namespace {

constexpr int kExitAccept = 0;
constexpr int kExitReject = 1;
constexpr int kExitUsage = 2;
constexpr int kExitLimit = 3;

struct SystemDeleter {
    void operator()(wkpc_system* s) const { wkpc_system_free(s); }
};
struct ResultDeleter {
    void operator()(wkpc_result* r) const { wkpc_result_free(r); }
};
struct ReportDeleter {
    void operator()(wkpc_report* r) const { wkpc_report_free(r); }
};
struct StringDeleter {
    void operator()(char* s) const { wkpc_string_free(s); }
};

using SystemPtr = std::unique_ptr<wkpc_system, SystemDeleter>;
using ResultPtr = std::unique_ptr<wkpc_result, ResultDeleter>;
using ReportPtr = std::unique_ptr<wkpc_report, ReportDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream buf;
    buf << in.rdbuf();
    out = buf.str();
    return true;
}

bool write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out << content;
    return out.good();
}

SystemPtr load_system(const std::string& path, int& exit_code) {
    std::string text;
    if (!read_file(path, text)) {
        std::cerr << "error: cannot read '" << path << "'\n";
        exit_code = kExitUsage;
        return nullptr;
    }
    char err[512];
    wkpc_system* sys = nullptr;
    if (wkpc_system_parse(text.c_str(), &sys, err, sizeof err) != WKPC_OK) {
        std::cerr << "error: " << path << ": " << err << "\n";
        exit_code = kExitUsage;
        return nullptr;
    }
    return SystemPtr(sys);
}

// "-" on the command line denotes the empty word.
std::string normalize_word(const std::string& w) { return w == "-" ? "" : w; }

int run_check(const std::string& file, const std::string& word, const std::string& engine,
              std::uint64_t max_configs, const std::string& trace_out) {
    int exit_code = 0;
    SystemPtr sys = load_system(file, exit_code);
    if (!sys) return exit_code;

    const wkpc_engine eng =
        engine == "bruteforce" ? WKPC_ENGINE_BRUTEFORCE : WKPC_ENGINE_LAZY;
    char err[512];
    wkpc_result* raw = nullptr;
    if (wkpc_check(sys.get(), normalize_word(word).c_str(), eng, max_configs, &raw, err,
                   sizeof err) != WKPC_OK) {
        std::cerr << "error: " << err << "\n";
        return kExitUsage;
    }
    ResultPtr result(raw);

    const wkpc_verdict verdict = wkpc_result_verdict(result.get());
    std::cout << (verdict == WKPC_ACCEPT   ? "ACCEPT"
                  : verdict == WKPC_REJECT ? "REJECT"
                                           : "LIMIT");
    if (const char* witness = wkpc_result_witness(result.get())) {
        std::cout << " witness=" << (*witness ? witness : "-");
    }
    std::cout << " configs=" << wkpc_result_configurations(result.get()) << "\n";

    if (!trace_out.empty()) {
        if (StringPtr trace{wkpc_result_trace_text(result.get())}) {
            if (!write_file(trace_out, trace.get())) {
                std::cerr << "error: cannot write '" << trace_out << "'\n";
                return kExitUsage;
            }
        } else {
            std::cerr << "note: no trace to write (verdict is not ACCEPT)\n";
        }
    }

    switch (verdict) {
        case WKPC_ACCEPT: return kExitAccept;
        case WKPC_REJECT: return kExitReject;
        default: return kExitLimit;
    }
}

int run_scan(const std::string& file, const std::string& symbol, std::uint32_t max_length,
             std::uint64_t max_configs, const std::string& report_out) {
    int exit_code = 0;
    SystemPtr sys = load_system(file, exit_code);
    if (!sys) return exit_code;

    char err[512];
    wkpc_report* raw = nullptr;
    if (wkpc_scan(sys.get(), symbol.c_str(), max_length, max_configs, &raw, err,
                  sizeof err) != WKPC_OK) {
        std::cerr << "error: " << err << "\n";
        return kExitUsage;
    }
    ReportPtr report(raw);

    StringPtr text{wkpc_report_text(report.get())};
    if (!report_out.empty()) {
        if (!write_file(report_out, text.get())) {
            std::cerr << "error: cannot write '" << report_out << "'\n";
            return kExitUsage;
        }
    } else {
        std::cout << text.get();
    }
    return wkpc_report_any_limit(report.get()) ? kExitLimit : kExitAccept;
}

int run_builtin(const std::string& name, const std::string& variant,
                const std::string& out_path) {
    if (name != "squares") {
        std::cerr << "error: unknown builtin '" << name << "' (available: squares)\n";
        return kExitUsage;
    }
    const wkpc_squares_variant v = variant == "as-printed" ? WKPC_SQUARES_AS_PRINTED
                                                           : WKPC_SQUARES_CORRECTED;
    wkpc_system* raw = nullptr;
    if (wkpc_system_builtin_squares(v, &raw) != WKPC_OK) {
        std::cerr << "error: could not build the squares system\n";
        return kExitUsage;
    }
    SystemPtr sys(raw);
    StringPtr text{wkpc_system_serialize(sys.get())};
    if (!out_path.empty()) {
        if (!write_file(out_path, text.get())) {
            std::cerr << "error: cannot write '" << out_path << "'\n";
            return kExitUsage;
        }
    } else {
        std::cout << text.get();
    }
    return kExitAccept;
}

int run_validate_trace(const std::string& file, const std::string& word,
                       const std::string& trace_path) {
    int exit_code = 0;
    SystemPtr sys = load_system(file, exit_code);
    if (!sys) return exit_code;

    std::string trace_text;
    if (!read_file(trace_path, trace_text)) {
        std::cerr << "error: cannot read '" << trace_path << "'\n";
        return kExitUsage;
    }
    char err[512];
    const wkpc_status st = wkpc_validate_trace(sys.get(), normalize_word(word).c_str(),
                                               trace_text.c_str(), err, sizeof err);
    switch (st) {
        case WKPC_OK:
            std::cout << "VALID\n";
            return kExitAccept;
        case WKPC_ERR_TRACE:
            std::cout << "INVALID: " << err << "\n";
            return kExitReject;
        default:
            std::cerr << "error: " << err << "\n";
            return kExitUsage;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Watson-Crick parallel communicating automata system simulator"};
    app.require_subcommand(1);

    std::string file, word, trace_path, report_path, out_path;
    std::string engine = "lazy";
    std::string variant = "corrected";
    std::string symbol;
    std::string builtin_name;
    std::uint32_t max_length = 100;
    std::uint64_t max_configs = 0;  // 0 = library default

    auto* check = app.add_subcommand("check", "Decide membership of a word");
    check->add_option("file", file, "system definition file")->required();
    check->add_option("--word", word, "input word ('-' for the empty word)")->required();
    check->add_option("--trace", trace_path, "write the accepting trace to this file");
    check->add_option("--engine", engine, "search engine")
        ->check(CLI::IsMember({"lazy", "bruteforce"}));
    check->add_option("--max-configs", max_configs, "configuration budget (0 = default)");

    auto* scan = app.add_subcommand("scan", "Scan symbol^m for m = 0..max");
    scan->add_option("file", file, "system definition file")->required();
    scan->add_option("--symbol", symbol, "alphabet symbol to repeat")->required();
    scan->add_option("--max", max_length, "largest length to test")->required();
    scan->add_option("--report", report_path, "write the report to this file");
    scan->add_option("--max-configs", max_configs,
                     "per-length configuration budget (0 = default)");

    auto* builtin = app.add_subcommand("builtin", "Emit a built-in system definition");
    builtin->add_option("name", builtin_name, "builtin name (squares)")->required();
    builtin->add_option("--variant", variant, "table edition")
        ->check(CLI::IsMember({"corrected", "as-printed"}));
    builtin->add_option("--out", out_path, "write the definition to this file");

    auto* validate = app.add_subcommand("validate-trace", "Replay and check a trace file");
    validate->add_option("file", file, "system definition file")->required();
    validate->add_option("--word", word, "input word the trace claims to accept")
        ->required();
    validate->add_option("--trace", trace_path, "trace file to validate")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (check->parsed()) return run_check(file, word, engine, max_configs, trace_path);
    if (scan->parsed()) return run_scan(file, symbol, max_length, max_configs, report_path);
    if (builtin->parsed()) return run_builtin(builtin_name, variant, out_path);
    if (validate->parsed()) return run_validate_trace(file, word, trace_path);
    return kExitUsage;
}
