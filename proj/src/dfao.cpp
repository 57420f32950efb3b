#include "seqlab/dfao.hpp"

namespace seqlab {

void DFAO::validate() const {
    if (k < 2) throw std::invalid_argument("malformed DFAO: base must be at least 2");
    if (states < 1) throw std::invalid_argument("malformed DFAO: needs at least one state");
    if (delta.size() != static_cast<std::size_t>(states) * k)
        throw std::invalid_argument("malformed DFAO: transition table size mismatch");
    for (int t : delta)
        if (t < 0 || t >= states) throw std::invalid_argument("malformed DFAO: transition target out of range");
    if (static_cast<int>(tau.size()) != states)
        throw std::invalid_argument("malformed DFAO: output map size mismatch");
    for (Symbol s : tau)
        if (s < 0 || s >= alphabet_size) throw std::invalid_argument("malformed DFAO: output symbol out of range");
    if (q0 < 0 || q0 >= states) throw std::invalid_argument("malformed DFAO: initial state out of range");
}

int DFAO::state_at(u64 n) const {
    int q = q0;
    if (n == 0) return q;
    u64 kk = static_cast<u64>(k);
    // walk digits most significant first
    u64 pows[64];
    int np = 0;
    for (u64 p = 1; p <= n; p *= kk) {
        pows[np++] = p;
        if (p > n / kk) break;
    }
    for (int i = np - 1; i >= 0; --i) {
        int d = static_cast<int>((n / pows[i]) % kk);
        q = step(q, d);
    }
    return q;
}

Symbol DFAO::output(u64 n) const { return tau[static_cast<std::size_t>(state_at(n))]; }

Sequence dfao_sequence(const DFAO& m, int k) {
    if (k != m.k) throw std::invalid_argument("base does not match the automaton's digit arity");
    m.validate();
    auto backing = std::make_shared<DFAO>(m);
    Sequence s(Alphabet(m.alphabet_size), [backing](u64 n) { return backing->output(n); },
               "dfao:" + m.name);
    s.dfao_backing = backing;
    return s;
}

DFAO thue_morse_dfao() {
    DFAO m;
    m.k = 2;
    m.states = 2;
    m.delta = {0, 1, 1, 0};
    m.q0 = 0;
    m.tau = {0, 1};
    m.alphabet_size = 2;
    m.name = "thue_morse";
    return m;
}

DFAO period_doubling_dfao() {
    // State tracks the parity of the current trailing run of ones.
    DFAO m;
    m.k = 2;
    m.states = 2;
    m.delta = {0, 1, 0, 0};  // q0: 0->q0, 1->q1 ; q1: 0->q0, 1->q0
    m.q0 = 0;
    m.tau = {0, 1};
    m.alphabet_size = 2;
    m.name = "period_doubling";
    return m;
}

DFAO rudin_shapiro_dfao() {
    // States (prev digit, parity of "11" count so far).
    DFAO m;
    m.k = 2;
    m.states = 4;
    // state encoding: 2*parity + prev
    // from (prev, par): on 0 -> (0, par); on 1 -> (1, par ^ prev)
    m.delta = {
        0, 1,  // state 0 = (prev 0, par 0)
        0, 3,  // state 1 = (prev 1, par 0)
        2, 3,  // state 2 = (prev 0, par 1)
        2, 1,  // state 3 = (prev 1, par 1)
    };
    m.q0 = 0;
    m.tau = {0, 0, 1, 1};
    m.alphabet_size = 2;
    m.name = "rudin_shapiro";
    return m;
}

DFAO constant_dfao() {
    DFAO m;
    m.k = 2;
    m.states = 1;
    m.delta = {0, 0};
    m.q0 = 0;
    m.tau = {0};
    m.alphabet_size = 2;
    m.name = "constant";
    return m;
}

DFAO digit_sum_base3_dfao() {
    DFAO m;
    m.k = 3;
    m.states = 2;
    m.delta = {0, 1, 0, 1, 0, 1};
    m.q0 = 0;
    m.tau = {0, 1};
    m.alphabet_size = 2;
    m.name = "digit_sum_base3_mod2";
    return m;
}

const std::vector<DFAO>& builtin_dfaos() {
    static const std::vector<DFAO> all = {
        thue_morse_dfao(), period_doubling_dfao(), rudin_shapiro_dfao(),
        constant_dfao(), digit_sum_base3_dfao(),
    };
    return all;
}

}  // namespace seqlab
