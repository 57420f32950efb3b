#pragma once

// Finite-alphabet sequences: a total deterministic map n -> symbol over a
// 0-based contiguous alphabet, plus bulk evaluation and sparse perturbation.

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "seqlab/base.hpp"
#include "seqlab/parallel.hpp"

namespace seqlab {

struct DFAO;

struct Alphabet {
    int size = 2;
    std::vector<std::string> labels;  // empty, or one label per symbol

    explicit Alphabet(int n = 2) : size(n) {
        if (n < 1) throw std::invalid_argument("alphabet must have at least one symbol");
    }
    Alphabet(int n, std::vector<std::string> names) : size(n), labels(std::move(names)) {
        if (n < 1) throw std::invalid_argument("alphabet must have at least one symbol");
        if (!labels.empty() && static_cast<int>(labels.size()) != n)
            throw std::invalid_argument("label count does not match alphabet size");
    }
    std::string label(int s) const {
        return labels.empty() ? std::to_string(s) : labels[static_cast<std::size_t>(s)];
    }
};

using Symbol = int;

class Sequence {
  public:
    Sequence() = default;
    Sequence(Alphabet alpha, std::function<Symbol(u64)> eval, std::string tag)
        : alphabet_(std::move(alpha)), eval_(std::move(eval)), tag_(std::move(tag)) {}

    Symbol eval(u64 n) const { return eval_(n); }
    Symbol operator()(u64 n) const { return eval_(n); }
    const Alphabet& alphabet() const { return alphabet_; }
    const std::string& tag() const { return tag_; }

    // Set when the sequence is DFAO-backed; enables exact fast paths.
    std::shared_ptr<const DFAO> dfao_backing;

  private:
    Alphabet alphabet_{2};
    std::function<Symbol(u64)> eval_;
    std::string tag_;
};

// Bulk evaluation of the first N symbols.
inline std::vector<std::uint8_t> eval_range(const Sequence& seq, u64 N) {
    if (seq.alphabet().size > 256) throw std::invalid_argument("alphabet too large for bulk evaluation");
    std::vector<std::uint8_t> out(N);
    for_chunks(0, N, [&](u64 lo, u64 hi, u64) {
        for (u64 n = lo; n < hi; ++n) out[n] = static_cast<std::uint8_t>(seq.eval(n));
    });
    return out;
}

Sequence constant_sequence(Symbol value, int alphabet_size = 2);

// Equals base off the perturbation set; on it, emits replacement(n).
inline Sequence perturb(const Sequence& base, std::function<bool(u64)> on_set,
                        std::function<Symbol(u64)> replacement, const std::string& note) {
    Alphabet alpha = base.alphabet();
    auto check = [alpha](Symbol s) {
        if (s < 0 || s >= alpha.size) throw std::domain_error("perturbation symbol outside alphabet");
        return s;
    };
    return Sequence(alpha,
                    [=](u64 n) { return on_set(n) ? check(replacement(n)) : base.eval(n); },
                    base.tag() + "+perturbed(" + note + ")");
}

inline Sequence constant_sequence(Symbol value, int alphabet_size) {
    if (value < 0 || value >= alphabet_size) throw std::domain_error("constant outside alphabet");
    return Sequence(Alphabet(alphabet_size), [value](u64) { return value; },
                    "constant-" + std::to_string(value));
}

// b_n = a_{n+m}
inline Sequence shift_by(const Sequence& a, u64 m) {
    return Sequence(a.alphabet(), [a, m](u64 n) { return a.eval(n + m); },
                    a.tag() + ">>" + std::to_string(m));
}

}  // namespace seqlab
