#pragma once

#include <stdexcept>
#include <string>

#include "seqlab/harmonic.hpp"
#include "seqlab/sequence.hpp"
#include "seqlab/smooth.hpp"

namespace seqlab {

// The 1/(n+1)-weighted average of the schedule's parity values over n < 3^g,
// normalized by the total weight H_{3^g} so it always lies in [0, 1].
// Below the exact cutoff both bounds coincide; above it they form a certified
// enclosure (endpoint harmonic values via outward-rounded expansions).
struct LogAverage {
    bool exact = false;
    mpq_class lo, hi;
    double value() const;
};

LogAverage log_average_at(const SmoothSchedule& sched, long g, int prec_bits = 256);
// Enclosure path regardless of size (exposed so the two paths can be
// cross-checked where both apply).
LogAverage log_average_enclosure(const SmoothSchedule& sched, long g, int prec_bits = 256);

struct LogOscResult {
    int j = 0;
    long gamma_j = 0;
    bool pass = false;
    double measured = 0.0;
};

// Window-membership test at level j: odd j needs the average < 2^-j,
// even j needs it > 1 - 2^-j. j = 0 passes vacuously.
LogOscResult log_osc_check(const Sequence& a, const SmoothSchedule& sched, int j);

struct ScheduleSearchError : std::runtime_error {
    long cap;
    long last_candidate;
    double closest;
    ScheduleSearchError(long cap_, long last_, double closest_, const std::string& what_)
        : std::runtime_error(what_), cap(cap_), last_candidate(last_), closest(closest_) {}
};

// gamma_0 = 0; each gamma_j is the smallest integer above gamma_{j-1} whose
// window test passes at N = 3^gamma_j. Throws ScheduleSearchError past the
// per-level search cap.
SmoothSchedule gamma_schedule(int j_max, int k_base = 3);

struct SmoothLogMass {
    mpq_class mass;   // exact S_K
    double ratio;     // S_K / log H_K
};

// S_K = sum over intervals i < K with beta_i = beta of the 1/(n+1) mass.
SmoothLogMass smooth_log_mass(int beta, std::size_t K);

}  // namespace seqlab
