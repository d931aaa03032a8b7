#include "core/squares.hpp"

#include <stdexcept>
#include <string>

namespace wkpc {
namespace {

/// Little helper so the transition table below reads like the published one.
struct TableBuilder {
    System& sys;
    Automaton& comp;

    void trans(const std::string& from, const std::string& upper,
               const std::string& lower, const std::string& to) {
        Transition t;
        t.from = sys.state_names.intern(from);
        t.to = sys.state_names.intern(to);
        t.upper_read = *sys.alphabet.parse_word(upper);
        t.lower_read = *sys.alphabet.parse_word(lower);
        comp.add_state(t.from);
        comp.add_state(t.to);
        comp.transitions.push_back(std::move(t));
    }
};

}  // namespace

const char* to_string(SquaresVariant v) {
    return v == SquaresVariant::Corrected ? "corrected" : "as-printed";
}

System build_squares_system(SquaresVariant variant) {
    const bool printed = variant == SquaresVariant::AsPrinted;

    System sys;
    const SymbolId a = sys.alphabet.intern("a");
    const SymbolId b = sys.alphabet.intern("b");
    const SymbolId c = sys.alphabet.intern("c");
    sys.relation.add(a, b);
    sys.relation.add(a, c);

    sys.components.resize(2);

    // Component 1 walks its lower head through the strand, reading one 'a'
    // per symbol after the first block plus one extra 'a' per block boundary
    // (two for the first), and hands control to component 2 after every move.
    {
        Automaton& a1 = sys.components[0];
        a1.initial = sys.state_names.intern("q0");
        a1.add_state(a1.initial);
        TableBuilder t{sys, a1};
        t.trans("s2", "", "", "K2");
        t.trans("q0", "", "b", "q0_l_b");
        t.trans("q0_l_b", "", "", "s2");
        t.trans("q0", "", "c", "q0_l_c");
        t.trans("q0_l_c", "", "", "s2");
        t.trans("q1", "aaa", "", "q1_aaa_l");
        t.trans("q1_aaa_l", "", "", "s2");
        t.trans("q2", "a", "c", "q2_a_c");
        t.trans("q2_a_c", "", "", "s2");
        t.trans("q2", "aa", "b", "q2_aa_b");
        t.trans("q2_aa_b", "", "", "s2");
        t.trans("q3", "a", "b", "q3_a_b");
        t.trans("q3_a_b", "", "", "s2");
        t.trans("q3", "aa", "c", "q3_aa_c");
        t.trans("q3_aa_c", "", "", "s2");
        t.trans("q2", "", "", "q2_l_l");
        t.trans("q2_l_l", "", "", "s2");
        t.trans("q3", "", "", "q3_l_l");
        t.trans("q3_l_l", "", "", "s2");
        t.trans("q4", "", "", "q4_l_l");
        t.trans("q4_l_l", "", "", "s2");
        a1.finals.push_back(sys.state_names.intern("q4"));
        a1.add_state(a1.finals.back());
    }

    // Component 2 mirrors component 1 one block behind: whenever it learns
    // that component 1 read some letter, it reads the opposite letter at its
    // own lower head, so equal-length alternating blocks are enforced.
    {
        Automaton& a2 = sys.components[1];
        a2.initial = sys.state_names.intern("q0");
        a2.add_state(a2.initial);
        TableBuilder t{sys, a2};
        for (const char* q : {"q0", "q1", "q2", "q3", "q4"}) t.trans(q, "", "", "K1");
        t.trans("q0_l_b", "", "", "q0_l_b_l");
        t.trans("q0_l_b_l", "", "", "q0");
        t.trans("q0_l_c", "", "", "q0_l_c_l");
        t.trans("q0_l_c_l", "", "", "q1");
        t.trans("q1_aaa_l", "a", "b", "q1_aaa_l_b");
        t.trans("q1_aaa_l_b", "", "", "q2");
        t.trans("q2_a_c", "a", "b", "q2_a_c_b");
        t.trans("q2_a_c_b", "", "", "q2");
        t.trans("q2_aa_b", "a", "c", "q2_aa_b_c");
        t.trans("q2_aa_b_c", "", "", "q3");
        t.trans("q3_a_b", "a", "c", "q3_a_b_c");
        t.trans("q3_a_b_c", "", "", printed ? "s3" : "q3");
        t.trans("q3_aa_c", "a", "b", "q3_aa_c_b");
        t.trans("q3_aa_c_b", "", "", "q2");
        if (printed) {
            t.trans("q2_l_l", "a", "b", "q2_l_l_b");
            t.trans("q2_l_l_b", "", "", "q4");
            t.trans("q3_l_l", "a", "c", "q3_l_l_c");
            t.trans("q3_l_l_c", "", "", "q4");
        } else {
            t.trans("q2_l_l", "a", "c", "q2_l_l_c");
            t.trans("q2_l_l_c", "", "", "q4");
            t.trans("q3_l_l", "a", "b", "q3_l_l_b");
            t.trans("q3_l_l_b", "", "", "q4");
        }
        t.trans("q4_l_l", "a", "b", "q4_l_l_b");
        t.trans("q4_l_l_b", "", "", "q4");
        t.trans("q4_l_l", "a", "c", printed ? "q3_l_l_c" : "q4_l_l_c");
        t.trans("q4_l_l_c", "", "", "q4");
        a2.finals.push_back(sys.state_names.intern("q4"));
        a2.add_state(a2.finals.back());
    }

    sys.add_query(sys.state_names.intern("K1"), 0);
    sys.add_query(sys.state_names.intern("K2"), 1);
    sys.reindex();
    return sys;
}

Word squares_witness(std::uint32_t n) {
    if (n < 2) throw std::invalid_argument("squares_witness requires n >= 2");
    // Ids match build_squares_system's declaration order: a=0, b=1, c=2.
    const SymbolId b = 1, c = 2;
    Word w;
    w.reserve(static_cast<std::size_t>(n) * n);
    for (std::uint32_t block = 0; block < n; ++block)
        for (std::uint32_t k = 0; k < n; ++k) w.push_back(block % 2 == 0 ? b : c);
    return w;
}

std::uint32_t boundary_count(const Alphabet& alphabet, WordView w) {
    const auto b = alphabet.find("b");
    const auto c = alphabet.find("c");
    for (SymbolId s : w)
        if ((!b || s != *b) && (!c || s != *c))
            throw std::invalid_argument("boundary_count: word must be over {b,c}, got '" +
                                        alphabet.name(s) + "'");
    std::uint32_t count = 0;
    for (std::size_t j = 0; j + 1 < w.size(); ++j)
        if (w[j] != w[j + 1]) ++count;
    return count;
}

}  // namespace wkpc
