#include "wkpc/wkpc.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "core/engine.hpp"
#include "core/format.hpp"
#include "core/squares.hpp"
#include "core/verify.hpp"

struct wkpc_system {
    wkpc::System sys;
};

struct wkpc_result {
    wkpc::MembershipResult result;
    std::string witness;     // cached text form
    std::string trace_text;  // cached text form, empty unless accepted
};

struct wkpc_report {
    wkpc::ScanReport report;
    std::string text;
    std::vector<std::string> witnesses;  // indexed by length, "" when absent
};

namespace {

void put_error(char* err, size_t cap, const std::string& msg) {
    if (!err || cap == 0) return;
    const size_t n = msg.size() < cap - 1 ? msg.size() : cap - 1;
    std::memcpy(err, msg.data(), n);
    err[n] = '\0';
}

char* dup_string(const std::string& s) {
    char* out = new (std::nothrow) char[s.size() + 1];
    if (!out) return nullptr;
    std::memcpy(out, s.data(), s.size() + 1);
    return out;
}

wkpc_verdict to_c(wkpc::Verdict v) {
    switch (v) {
        case wkpc::Verdict::Accept: return WKPC_ACCEPT;
        case wkpc::Verdict::Reject: return WKPC_REJECT;
        case wkpc::Verdict::Limit: return WKPC_LIMIT;
    }
    return WKPC_REJECT;
}

wkpc_status parse_word_arg(const wkpc::System& sys, const char* word, wkpc::Word& out,
                           char* err, size_t err_cap) {
    if (!word) {
        put_error(err, err_cap, "word must not be NULL");
        return WKPC_ERR_ARGUMENT;
    }
    std::size_t offset = 0;
    auto parsed = sys.alphabet.parse_word(word, &offset);
    if (!parsed) {
        put_error(err, err_cap,
                  "word '" + std::string(word) + "': no alphabet symbol matches at offset " +
                      std::to_string(offset));
        return WKPC_ERR_ARGUMENT;
    }
    out = std::move(*parsed);
    return WKPC_OK;
}

}  // namespace

extern "C" {

wkpc_status wkpc_system_parse(const char* text, wkpc_system** out_sys, char* err,
                              size_t err_cap) {
    if (!text || !out_sys) {
        put_error(err, err_cap, "text and out_sys must not be NULL");
        return WKPC_ERR_ARGUMENT;
    }
    *out_sys = nullptr;
    try {
        auto* handle = new wkpc_system{wkpc::parse_system(text)};
        *out_sys = handle;
        return WKPC_OK;
    } catch (const wkpc::ParseError& e) {
        put_error(err, err_cap, e.what());
        return WKPC_ERR_PARSE;
    } catch (const std::exception& e) {
        put_error(err, err_cap, e.what());
        return WKPC_ERR_INTERNAL;
    }
}

wkpc_status wkpc_system_builtin_squares(wkpc_squares_variant variant,
                                        wkpc_system** out_sys) {
    if (!out_sys) return WKPC_ERR_ARGUMENT;
    *out_sys = nullptr;
    try {
        const auto v = variant == WKPC_SQUARES_AS_PRINTED
                           ? wkpc::SquaresVariant::AsPrinted
                           : wkpc::SquaresVariant::Corrected;
        *out_sys = new wkpc_system{wkpc::build_squares_system(v)};
        return WKPC_OK;
    } catch (const std::exception&) {
        return WKPC_ERR_INTERNAL;
    }
}

char* wkpc_system_serialize(const wkpc_system* sys) {
    if (!sys) return nullptr;
    try {
        return dup_string(wkpc::serialize_system(sys->sys));
    } catch (const std::exception&) {
        return nullptr;
    }
}

void wkpc_system_free(wkpc_system* sys) { delete sys; }

wkpc_status wkpc_check(const wkpc_system* sys, const char* word, wkpc_engine engine,
                       uint64_t max_configurations, wkpc_result** out_result, char* err,
                       size_t err_cap) {
    if (!sys || !out_result) {
        put_error(err, err_cap, "sys and out_result must not be NULL");
        return WKPC_ERR_ARGUMENT;
    }
    *out_result = nullptr;
    wkpc::Word upper;
    if (const auto st = parse_word_arg(sys->sys, word, upper, err, err_cap); st != WKPC_OK)
        return st;
    try {
        wkpc::SearchLimits limits;
        if (max_configurations != 0) limits.max_configurations = max_configurations;
        wkpc::MembershipResult r = engine == WKPC_ENGINE_BRUTEFORCE
                                       ? wkpc::brute_force_accepts(sys->sys, upper, limits)
                                       : wkpc::search(sys->sys, upper, limits);
        auto* handle = new wkpc_result;
        handle->result = std::move(r);
        if (handle->result.witness_lower)
            handle->witness = sys->sys.alphabet.format_word(*handle->result.witness_lower);
        if (handle->result.trace)
            handle->trace_text =
                wkpc::trace_to_text(sys->sys, upper, *handle->result.trace);
        *out_result = handle;
        return WKPC_OK;
    } catch (const std::exception& e) {
        put_error(err, err_cap, e.what());
        return WKPC_ERR_INTERNAL;
    }
}

wkpc_verdict wkpc_result_verdict(const wkpc_result* result) {
    return result ? to_c(result->result.verdict) : WKPC_REJECT;
}

const char* wkpc_result_witness(const wkpc_result* result) {
    if (!result || result->result.verdict != wkpc::Verdict::Accept) return nullptr;
    return result->witness.c_str();
}

uint64_t wkpc_result_configurations(const wkpc_result* result) {
    return result ? result->result.configurations_explored : 0;
}

char* wkpc_result_trace_text(const wkpc_result* result) {
    if (!result || result->result.verdict != wkpc::Verdict::Accept) return nullptr;
    return dup_string(result->trace_text);
}

void wkpc_result_free(wkpc_result* result) { delete result; }

wkpc_status wkpc_scan(const wkpc_system* sys, const char* symbol, uint32_t max_length,
                      uint64_t max_configurations, wkpc_report** out_report, char* err,
                      size_t err_cap) {
    if (!sys || !out_report || !symbol) {
        put_error(err, err_cap, "sys, symbol and out_report must not be NULL");
        return WKPC_ERR_ARGUMENT;
    }
    *out_report = nullptr;
    const auto sym = sys->sys.alphabet.find(symbol);
    if (!sym) {
        put_error(err, err_cap, "unknown symbol '" + std::string(symbol) + "'");
        return WKPC_ERR_ARGUMENT;
    }
    try {
        wkpc::SearchLimits limits;
        if (max_configurations != 0) limits.max_configurations = max_configurations;
        auto* handle = new wkpc_report;
        handle->report = wkpc::scan_unary(sys->sys, *sym, max_length, limits);
        handle->text = wkpc::report_to_text(sys->sys, handle->report);
        handle->witnesses.resize(handle->report.entries.size());
        for (std::size_t m = 0; m < handle->report.entries.size(); ++m)
            if (const auto& w = handle->report.entries[m].witness)
                handle->witnesses[m] = sys->sys.alphabet.format_word(*w);
        *out_report = handle;
        return WKPC_OK;
    } catch (const std::exception& e) {
        put_error(err, err_cap, e.what());
        return WKPC_ERR_INTERNAL;
    }
}

uint32_t wkpc_report_max_length(const wkpc_report* report) {
    return report ? report->report.max_length : 0;
}

wkpc_verdict wkpc_report_verdict(const wkpc_report* report, uint32_t m) {
    if (!report || m >= report->report.entries.size()) return WKPC_REJECT;
    return to_c(report->report.entries[m].verdict);
}

const char* wkpc_report_witness(const wkpc_report* report, uint32_t m) {
    if (!report || m >= report->report.entries.size()) return nullptr;
    if (!report->report.entries[m].witness) return nullptr;
    return report->witnesses[m].c_str();
}

uint64_t wkpc_report_configurations(const wkpc_report* report, uint32_t m) {
    if (!report || m >= report->report.entries.size()) return 0;
    return report->report.entries[m].configurations;
}

int wkpc_report_any_limit(const wkpc_report* report) {
    return report && report->report.any_limit() ? 1 : 0;
}

char* wkpc_report_text(const wkpc_report* report) {
    return report ? dup_string(report->text) : nullptr;
}

void wkpc_report_free(wkpc_report* report) { delete report; }

wkpc_status wkpc_validate_trace(const wkpc_system* sys, const char* word,
                                const char* trace_text, char* err, size_t err_cap) {
    if (!sys || !trace_text) {
        put_error(err, err_cap, "sys and trace_text must not be NULL");
        return WKPC_ERR_ARGUMENT;
    }
    wkpc::Word upper;
    if (const auto st = parse_word_arg(sys->sys, word, upper, err, err_cap); st != WKPC_OK)
        return st;
    try {
        const wkpc::TraceDocument doc = wkpc::trace_from_text(sys->sys, trace_text);
        if (doc.word != upper) {
            put_error(err, err_cap, "trace was recorded for a different word");
            return WKPC_ERR_TRACE;
        }
        const wkpc::TraceCheck check = wkpc::validate_trace(sys->sys, upper, doc.trace);
        if (!check.ok) {
            put_error(err, err_cap, check.message);
            return WKPC_ERR_TRACE;
        }
        return WKPC_OK;
    } catch (const wkpc::ParseError& e) {
        put_error(err, err_cap, e.what());
        return WKPC_ERR_PARSE;
    } catch (const std::exception& e) {
        put_error(err, err_cap, e.what());
        return WKPC_ERR_INTERNAL;
    }
}

void wkpc_string_free(char* s) { delete[] s; }

}  // extern "C"
