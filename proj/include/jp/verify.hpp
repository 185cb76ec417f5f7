#ifndef JP_VERIFY_HPP
#define JP_VERIFY_HPP

#include "jp/params.hpp"
#include "jp/pineiro.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace jp {

enum class CheckStatus { pass, fail, skip };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    // witness on failure, degeneracy reason on skip, empty on pass
    std::string detail;
};

struct VerificationReport {
    ParameterSet params;
    std::vector<CheckResult> checks;
    long elapsed_ms = 0;

    bool all_passed() const;
    size_t count(CheckStatus s) const;
    const CheckResult* find(const std::string& name) const;
};

// Runs every structural check for one parameter set. The check list and
// its order are fixed; checks that do not apply are reported as skips
// with a reason. When corrupt_infinity_falling is set, the indicated
// falling-factorial coefficient that feeds both operators is bumped by
// one; the checks then run against the corrupted operators (negative
// control).
VerificationReport verify_all(const ParameterSet& p,
                              std::optional<size_t> corrupt_infinity_falling = std::nullopt);

// deterministic sequence generator for small-height rationals
class ParamSampler {
  public:
    explicit ParamSampler(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next_u64();
    long next_long(long lo, long hi); // inclusive
    Rational next_rational();         // small height, usually non-integer
    ParameterSet next_params(size_t r_min, size_t r_max);

  private:
    std::uint64_t state_;
};

// all consistent parameter sets with the given bounds, in a fixed
// lexicographic order
std::vector<ParameterSet> enumerate_consistent(size_t r_min, size_t r_max, long m_max,
                                               long k_max);

struct SweepSpec {
    size_t r_min = 1;
    size_t r_max = 3;
    long m_max = 3;
    long k_max = 4;
    size_t generic_count = 0;
    size_t generic_r_max = 2;
    std::uint64_t seed = 20250108;
    size_t jobs = 1;
};

struct SweepResult {
    SweepSpec spec;
    std::vector<VerificationReport> reports; // grid order, then generic order
    size_t grid_count = 0;

    size_t failed_reports() const;
};

// verify_all over the full consistent grid plus sampled generic
// parameter sets; grid points may run in parallel, the report order is
// independent of the schedule
SweepResult sweep(const SweepSpec& spec);

} // namespace jp

#endif
