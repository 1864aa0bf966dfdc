#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zetabound/interval.hpp"

namespace zetabound {

enum class Status { proved, refuted, inconclusive };

std::string_view to_string(Status s);

/// Outcome of certifying one inequality over one t-range.
struct VerificationReport {
    std::string region;
    Status status = Status::inconclusive;
    std::int64_t cells = 0;
    int depth = 0;
    /// Cell where the difference was negative (refuted) or undecided.
    std::optional<Interval> witness;
    /// Ordered parameter list, values as printed on the command line.
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<std::pair<std::string, Interval>> coefficients;
    std::string note;

    bool proved() const { return status == Status::proved; }
};

/// proved < inconclusive < refuted; the worst status of a set decides.
Status worst(Status a, Status b);

}  // namespace zetabound
