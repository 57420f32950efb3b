#pragma once

// Kernel machinery for base-k subsequences a_{k^i n + r}: extraction,
// empirical discrepancy with a three-valued verdict, density-based
// clustering of kernel addresses, exact kernel enumeration for automata,
// closure constructions (product, coding, arithmetic progressions, partial
// sums), and a pumping-style address comparison.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "seqlab/dfao.hpp"
#include "seqlab/sequence.hpp"

namespace seqlab {

struct KernelAddress {
    int i = 0;  // depth
    u64 r = 0;  // residue, 0 <= r < k^i
    u64 k = 2;  // base

    void validate() const;
    u64 stride() const;       // k^i, overflow-checked
    std::string word() const;  // digits of r, most significant first, padded to length i
};

// b_n = a_{k^i n + r}. Evaluation at n past the 64-bit index range throws
// std::overflow_error.
Sequence kernel_element(const Sequence& a, const KernelAddress& addr);

enum class Verdict { equal, distinct, inconclusive };

std::string verdict_name(Verdict v);

// Empirical comparison of two sequences on a checkpoint ladder.
// Verdict rule: "equal" iff the final density is <= eps and the densities
// are non-increasing over the last three checkpoints; "distinct" iff the
// final density is >= max(10*eps, 0.1); otherwise "inconclusive".
struct DiscrepancyReport {
    std::vector<u64> checkpoints;   // strictly increasing
    std::vector<double> densities;  // (1/C) #{n < C : a_n != b_n} per checkpoint C
    double eps = 0.01;
    Verdict verdict = Verdict::inconclusive;
};

// The ladder N/16, N/8, N/4, N/2, N (zero-free, deduplicated).
std::vector<u64> default_checkpoints(u64 N);

DiscrepancyReport discrepancy_density(const Sequence& a, const Sequence& b, u64 N,
                                      std::vector<u64> checkpoints = {}, double eps = 0.01);

// Clustering of all addresses (i, r), i <= depth, by empirical equality.
// Exploration is depth-major, residue-minor; each address is compared
// against class representatives in creation order and merged into the first
// "equal" one, or failing that the first "inconclusive" one (recorded as
// such in the merge evidence and tallied), so representatives stay pairwise
// distinct and the classes partition the explored addresses. The first
// address of each class is its representative and is lexicographically
// least in the class.
struct KernelClustering {
    u64 base = 2;
    int requested_depth = 0;
    int depth = 0;  // effective depth after any truncation
    u64 horizon = 0;
    double eps = 0.01;
    bool truncated = false;
    std::string warning;

    std::vector<KernelAddress> addresses;       // exploration order
    std::vector<std::size_t> parent;            // per address: index of its representative
    std::vector<int> class_id;                  // per address: class in creation order
    std::vector<std::size_t> representatives;   // per class: address index
    std::vector<int> classes_per_depth;         // class count after exploring depth 0, 1, ...

    struct MergeRecord {
        std::size_t address_index;
        std::size_t representative_index;
        DiscrepancyReport report;
    };
    std::vector<MergeRecord> merges;
    int inconclusive_merges = 0;
    int inconclusive_comparisons = 0;

    int class_count() const { return static_cast<int>(representatives.size()); }
};

// The whole prefix a_0 .. a_{k^depth * N - 1} is evaluated once and held in
// memory; the depth is truncated (with a warning) when that prefix would
// exceed 2^28 entries or the 64-bit index range.
KernelClustering cluster_kernel(const Sequence& a, u64 k, int depth, u64 N, double eps = 0.01);

// Exact kernel size of an automaton: closure of the digit-composition maps
// on a start state normalized for leading zeros, counting distinct output
// vectors over the reachable states — i.e. the number of distinct kernel
// sequences.
struct ExactKernel {
    int size = 0;
    std::vector<std::string> representatives;   // first word reaching each class
    std::map<std::string, int> class_of_word;   // every word visited by the closure
};

ExactKernel exact_kernel_dfao(const DFAO& m, int k);

// (a x b)_n over the product alphabet, symbol = a_n * |B| + b_n.
Sequence product(const Sequence& a, const Sequence& b);

// rho applied pointwise; rho must be total on a's alphabet.
Sequence coding(const Sequence& a, const std::vector<Symbol>& rho);

// b_n = a_{qn+r}, with a_m := a_0 for m < 0.
Sequence ap_restrict(const Sequence& a, u64 q, i64 r);

// Finite abelian monoid given by its operation table.
struct MonoidTable {
    int size = 0;
    std::vector<int> op;  // row-major size x size
    int identity = 0;
    std::string name;

    int apply(int x, int y) const { return op[static_cast<std::size_t>(x) * size + y]; }
    void validate() const;  // shape, range, identity, commutativity, associativity
};

// Z/m under addition.
MonoidTable cyclic_monoid(int m);

// (sum a)_0 = identity, (sum a)_n = a_0 + ... + a_{n-1} in the monoid.
// Prefix states are cached densely behind a lock, so random access costs
// one extension pass and replays are O(1).
Sequence partial_sums(const Sequence& a, const MonoidTable& monoid);

// Pumping comparison: for each t, the kernel sequence at the address of
// w(t) = v u^t v2 is compared against the address of w = v u v2.
struct PumpReport {
    std::string word;
    std::vector<int> ts;
    std::vector<std::string> pumped_words;
    std::vector<DiscrepancyReport> reports;
    bool truncated = false;  // t-range cut where indices would overflow
};

PumpReport pump_test(const Sequence& a, u64 k, const std::string& w, const std::string& v,
                     const std::string& u, const std::string& v2, int t_min, int t_max, u64 N,
                     double eps = 0.01);

// Clustering rephrased as an address-to-class map: d classes, one
// representative kernel address per class, and phi defined on every digit
// word of length <= depth.
struct StructureTable {
    int d = 0;
    std::vector<KernelAddress> representatives;
    std::map<std::string, int> phi;
    int inconclusive_comparisons = 0;
    KernelClustering clustering;
};

StructureTable structure_extract(const Sequence& a, u64 k, int depth, u64 N, double eps = 0.01);

}  // namespace seqlab
