#pragma once

#include "vtcodes/binary.hpp"
#include "vtcodes/qary.hpp"
#include "vtcodes/word.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace vtcodes {

enum class EditKind { identity, deletion, insertion };

/// One use of a single-edit channel. `position` is the deleted index, or the
/// index the inserted symbol will occupy.
struct ChannelEvent {
    EditKind kind = EditKind::identity;
    std::size_t position = 0;
    Symbol symbol = 0;

    friend bool operator==(const ChannelEvent &, const ChannelEvent &) = default;
};

[[nodiscard]] BinaryWord apply_channel(const BinaryWord &word, const ChannelEvent &event);
[[nodiscard]] QaryWord apply_channel(const QaryWord &word, const ChannelEvent &event);

enum class ChannelKind { deletion, insertion, mixed };

[[nodiscard]] std::string to_string(EditKind kind);
[[nodiscard]] std::string to_string(ChannelKind kind);
/// Accepts "deletion", "insertion", "mixed".
[[nodiscard]] ChannelKind parse_channel_kind(const std::string &text);

using CodeParams = std::variant<BinaryVtParams, QaryVtParams>;

struct FailureCase {
    std::uint64_t trial = 0;
    std::string message;
    ChannelEvent event;
    std::string error;  // empty when decoding succeeded but returned the wrong message
};

struct TrialReport {
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    std::vector<FailureCase> failures;  // sorted by trial
    double wall_time_seconds = 0;

    [[nodiscard]] double success_rate() const noexcept {
        return trials == 0 ? 0.0 : static_cast<double>(successes) / static_cast<double>(trials);
    }
};

/// Encode -> single edit -> correct -> extract, `trials` times. Each trial draws
/// from its own generator seeded by (seed, trial index), so the report is the
/// same for any worker count. Codec errors are recorded as failures.
[[nodiscard]] TrialReport run_trials(const CodeParams &params, ChannelKind kind, std::uint64_t trials,
                                     std::uint64_t seed, unsigned workers = 1);

[[nodiscard]] std::string trial_report_json(const TrialReport &report, const CodeParams &params, ChannelKind kind,
                                            std::uint64_t seed, int indent = -1);

} // namespace vtcodes
