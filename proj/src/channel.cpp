#include "vtcodes/channel.hpp"

#include "vtcodes/error.hpp"

#include "json.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>
#include <random>
#include <thread>

namespace vtcodes {

namespace {

template <typename T>
std::vector<T> splice(std::span<const T> word, const ChannelEvent &event, T alphabet_size) {
    std::vector<T> out(word.begin(), word.end());
    switch (event.kind) {
    case EditKind::identity:
        break;
    case EditKind::deletion:
        if (event.position >= word.size()) {
            throw ParameterError("deletion position " + std::to_string(event.position) + " outside 0.." +
                                 std::to_string(word.size()) + "-1");
        }
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(event.position));
        break;
    case EditKind::insertion:
        if (event.position > word.size()) {
            throw ParameterError("insertion position " + std::to_string(event.position) + " outside 0.." +
                                 std::to_string(word.size()));
        }
        if (event.symbol >= alphabet_size) {
            throw ParameterError("inserted symbol outside the alphabet");
        }
        out.insert(out.begin() + static_cast<std::ptrdiff_t>(event.position), static_cast<T>(event.symbol));
        break;
    }
    return out;
}

struct Codec {
    std::size_t n;
    std::size_t k;
    Symbol q;
};

Codec codec_of(const CodeParams &params) {
    return std::visit(
        [](const auto &p) -> Codec {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, BinaryVtParams>) {
                return {p.length(), p.message_bits(), 2};
            } else {
                return {p.length(), p.message_bits(), p.alphabet_size()};
            }
        },
        params);
}

// Runs one trial; returns the failure, if any.
std::optional<FailureCase> run_one(const CodeParams &params, const Codec &codec, ChannelKind kind,
                                   std::uint64_t seed, std::uint64_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    std::mt19937_64 rng(seq);

    std::vector<std::uint8_t> bits(codec.k);
    std::uniform_int_distribution<int> bit(0, 1);
    for (auto &b : bits) {
        b = static_cast<std::uint8_t>(bit(rng));
    }
    const BinaryWord message(std::move(bits));

    ChannelEvent event;
    const bool deletion = kind == ChannelKind::deletion || (kind == ChannelKind::mixed && bit(rng) == 0);
    if (deletion) {
        event.kind = EditKind::deletion;
        event.position = std::uniform_int_distribution<std::size_t>(0, codec.n - 1)(rng);
    } else {
        event.kind = EditKind::insertion;
        event.position = std::uniform_int_distribution<std::size_t>(0, codec.n)(rng);
        event.symbol = std::uniform_int_distribution<Symbol>(0, codec.q - 1)(rng);
    }

    FailureCase failure{trial, message.to_string(), event, {}};
    try {
        const BinaryWord decoded = std::visit(
            [&](const auto &p) -> BinaryWord {
                using P = std::decay_t<decltype(p)>;
                if constexpr (std::is_same_v<P, BinaryVtParams>) {
                    const auto received = apply_channel(encode_binary(message, p), event);
                    return extract_binary(correct_binary(received, p), p);
                } else {
                    const auto received = apply_channel(encode_q(message, p), event);
                    return extract_q(correct_q(received, p.code()), p);
                }
            },
            params);
        if (decoded == message) {
            return std::nullopt;
        }
    } catch (const std::exception &e) {
        failure.error = e.what();
    }
    return failure;
}

} // namespace

BinaryWord apply_channel(const BinaryWord &word, const ChannelEvent &event) {
    return BinaryWord(splice<std::uint8_t>(word.bits(), event, 2));
}

QaryWord apply_channel(const QaryWord &word, const ChannelEvent &event) {
    return QaryWord(splice<Symbol>(word.symbols(), event, word.alphabet_size()), word.alphabet_size());
}

std::string to_string(EditKind kind) {
    switch (kind) {
    case EditKind::identity: return "identity";
    case EditKind::deletion: return "deletion";
    case EditKind::insertion: return "insertion";
    }
    return "unknown";
}

std::string to_string(ChannelKind kind) {
    switch (kind) {
    case ChannelKind::deletion: return "deletion";
    case ChannelKind::insertion: return "insertion";
    case ChannelKind::mixed: return "mixed";
    }
    return "unknown";
}

ChannelKind parse_channel_kind(const std::string &text) {
    if (text == "deletion") {
        return ChannelKind::deletion;
    }
    if (text == "insertion") {
        return ChannelKind::insertion;
    }
    if (text == "mixed") {
        return ChannelKind::mixed;
    }
    throw ParameterError("unknown channel kind '" + text + "'");
}

TrialReport run_trials(const CodeParams &params, ChannelKind kind, std::uint64_t trials, std::uint64_t seed,
                       unsigned workers) {
    if (trials == 0) {
        throw ParameterError("at least one trial is required");
    }
    const auto start = std::chrono::steady_clock::now();
    const Codec codec = codec_of(params);
    const std::uint64_t parts = std::clamp<std::uint64_t>(workers, 1, trials);

    std::vector<std::vector<FailureCase>> failures(parts);
    auto run = [&](std::uint64_t part) {
        for (std::uint64_t i = part; i < trials; i += parts) {
            if (auto f = run_one(params, codec, kind, seed, i)) {
                failures[part].push_back(std::move(*f));
            }
        }
    };
    if (parts == 1) {
        run(0);
    } else {
        std::vector<std::thread> threads;
        for (std::uint64_t p = 0; p < parts; ++p) {
            threads.emplace_back(run, p);
        }
        for (auto &th : threads) {
            th.join();
        }
    }

    TrialReport report;
    report.trials = trials;
    for (auto &part : failures) {
        report.failures.insert(report.failures.end(), std::make_move_iterator(part.begin()),
                               std::make_move_iterator(part.end()));
    }
    std::sort(report.failures.begin(), report.failures.end(),
              [](const FailureCase &l, const FailureCase &r) { return l.trial < r.trial; });
    report.successes = trials - report.failures.size();
    report.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::string trial_report_json(const TrialReport &report, const CodeParams &params, ChannelKind kind,
                              std::uint64_t seed, int indent) {
    nlohmann::json p = std::visit(
        [](const auto &v) -> nlohmann::json {
            using P = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<P, BinaryVtParams>) {
                return {{"q", 2}, {"n", v.length()}, {"a", v.syndrome()}, {"k", v.message_bits()}};
            } else {
                return {{"q", v.alphabet_size()}, {"n", v.length()}, {"a", v.aux_syndrome()},
                        {"b", v.sum()},           {"k", v.message_bits()}};
            }
        },
        params);
    p["channel"] = to_string(kind);

    nlohmann::json failures = nlohmann::json::array();
    for (const auto &f : report.failures) {
        nlohmann::json event = {{"kind", to_string(f.event.kind)}, {"position", f.event.position}};
        event["symbol"] = f.event.kind == EditKind::insertion ? nlohmann::json(f.event.symbol) : nlohmann::json(nullptr);
        failures.push_back({{"trial", f.trial}, {"message", f.message}, {"event", event}, {"error", f.error}});
    }
    nlohmann::json doc = {
        {"params", p},
        {"seed", seed},
        {"trials", report.trials},
        {"successes", report.successes},
        {"rate", report.success_rate()},
        {"failures", failures},
        {"wall_time_s", std::round(report.wall_time_seconds * 1e6) / 1e6},
    };
    return doc.dump(indent);
}

} // namespace vtcodes
