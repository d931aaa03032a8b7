#include <regex>

#include "core/engine.hpp"
#include "core/format.hpp"
#include "core/squares.hpp"
#include "core/verify.hpp"
#include "doctest.h"

using namespace wkpc;

TEST_CASE("system serialization round trips and is deterministic") {
    for (auto variant : {SquaresVariant::Corrected, SquaresVariant::AsPrinted}) {
        const System sys = build_squares_system(variant);
        const std::string text = serialize_system(sys);
        CHECK(serialize_system(sys) == text);

        const System parsed = parse_system(text);
        CHECK(serialize_system(parsed) == text);
        CHECK(parsed.validate().empty());
        CHECK(parsed.degree() == 2);
        CHECK(parsed.components[0].transitions.size() ==
              sys.components[0].transitions.size());
        CHECK(parsed.components[1].transitions.size() ==
              sys.components[1].transitions.size());

        // Parsed systems behave identically.
        const Word upper(4, *parsed.alphabet.find("a"));
        const auto verdict = search(parsed, upper).verdict;
        CHECK(verdict == search(sys, upper).verdict);
    }
}

TEST_CASE("the corrected serialization names each query state once") {
    const std::string text = serialize_system(build_squares_system(SquaresVariant::Corrected));
    std::size_t queries = 0;
    std::istringstream in(text);
    std::string line;
    bool k1 = false, k2 = false;
    while (std::getline(in, line)) {
        if (line.rfind("query ", 0) != 0) continue;
        ++queries;
        k1 = k1 || line == "query K1 -> 1";
        k2 = k2 || line == "query K2 -> 2";
    }
    CHECK(queries == 2);
    CHECK(k1);
    CHECK(k2);
}

namespace {

std::size_t parse_error_line(const std::string& text) {
    try {
        (void)parse_system(text);
    } catch (const ParseError& e) {
        CHECK_FALSE(e.message().empty());
        return e.line();
    }
    FAIL("expected a ParseError");
    return static_cast<std::size_t>(-1);
}

}  // namespace

TEST_CASE("parse errors carry line numbers") {
    CHECK(parse_error_line("") == 0);                        // no components at all
    CHECK(parse_error_line("alphabet a\n") == 0);
    CHECK(parse_error_line("alphabet a a\n") == 1);          // duplicate symbol
    CHECK(parse_error_line("alphabet a\nrelation a x\n") == 2);
    CHECK(parse_error_line("alphabet a\nbogus line here\n") == 2);
    CHECK(parse_error_line("alphabet a\nrelation a\n") == 2);  // malformed

    // Duplicate component / duplicate initial.
    CHECK(parse_error_line("alphabet a\n"
                           "component 1 initial p final p\n"
                           "component 1 initial q final q\n") == 3);

    // Transition for a component that is not declared.
    CHECK(parse_error_line("alphabet a\n"
                           "component 1 initial p final p\n"
                           "trans 2 p - - p\n") == 3);

    // Closed state set: transitions must stay inside it.
    CHECK(parse_error_line("alphabet a\n"
                           "component 1 initial p final p\n"
                           "states 1 p\n"
                           "trans 1 p - - ghost\n") == 4);

    // Query states need a declared target and membership somewhere.
    CHECK(parse_error_line("alphabet a\n"
                           "component 1 initial p final p\n"
                           "query K1 -> 5\n") == 3);
    CHECK(parse_error_line("alphabet a\n"
                           "component 1 initial p final p\n"
                           "query K1 -> 1\n") == 3);  // K1 in no state set
    CHECK(parse_error_line("alphabet a\n"
                           "component 1 initial p final p\n"
                           "query K1 ->\n") == 3);

    // Unknown symbol inside a read.
    CHECK(parse_error_line("alphabet a\n"
                           "component 1 initial p final p\n"
                           "trans 1 p ax - p\n") == 3);
}

TEST_CASE("minimal hand-written systems parse") {
    const System sys = parse_system(
        "# identity loop\n"
        "alphabet a\n"
        "relation a a\n"
        "component 1 initial s final s\n"
        "trans 1 s a a s\n");
    CHECK(sys.degree() == 1);
    const Word upper(3, *sys.alphabet.find("a"));
    CHECK(search(sys, upper).verdict == Verdict::Accept);
}

TEST_CASE("trace round trip through text") {
    const System sys = build_squares_system(SquaresVariant::Corrected);
    const Word upper(9, *sys.alphabet.find("a"));
    const MembershipResult r = search(sys, upper);
    REQUIRE(r.verdict == Verdict::Accept);

    const std::string text = trace_to_text(sys, upper, *r.trace);
    const TraceDocument doc = trace_from_text(sys, text);
    CHECK(doc.word == upper);
    CHECK(doc.trace.steps.size() == r.trace->steps.size());
    CHECK(validate_trace(sys, upper, doc.trace).ok);
    CHECK(trace_to_text(sys, upper, doc.trace) == text);

    // Corrupting a read token makes the transition unresolvable.
    std::string broken = text;
    const auto pos = broken.find(" a c ");
    REQUIRE(pos != std::string::npos);
    broken.replace(pos, 5, " a b ");
    CHECK_THROWS_AS((void)trace_from_text(sys, broken), ParseError);
}

TEST_CASE("scan report records follow the documented shape") {
    const System sys = build_squares_system(SquaresVariant::Corrected);
    ScanReport report = scan_unary(sys, *sys.alphabet.find("a"), 9);
    report.variant = SquaresVariant::Corrected;
    const std::string text = report_to_text(sys, report);

    const std::regex record(R"(m=\d+ verdict=(ACCEPT|REJECT|LIMIT) witness=\S+ configs=\d+)");
    std::istringstream in(text);
    std::string line;
    std::size_t records = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        CHECK(std::regex_match(line, record));
        ++records;
    }
    CHECK(records == 10);
    CHECK(text.find("m=4 verdict=ACCEPT witness=bbcc") != std::string::npos);
    CHECK(text.find("m=9 verdict=ACCEPT witness=bbbcccbbb") != std::string::npos);
    CHECK(text.find("# accepted: 4 9\n") != std::string::npos);
}
