#pragma once

#include "vtcodes/error.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace vtcodes::detail {

// Candidate-search correction shared by the binary and q-ary codes.
//
// Candidates are generated canonically: a symbol is only inserted where it does
// not follow an equal symbol, and a run is only shortened at its first element.
// Each canonical edit produces a distinct word, so two members among the
// candidates is a genuine ambiguity rather than a duplicate.
template <typename T, typename IsMember>
std::vector<T> correct_single_edit(std::span<const T> received, std::size_t n, T alphabet_size,
                                   IsMember &&is_member) {
    const std::size_t len = received.size();
    if (len + 1 < n || len > n + 1) {
        throw ParameterError("received length " + std::to_string(len) + " is not within one of n = " +
                             std::to_string(n));
    }
    if (len == n) {
        std::vector<T> word(received.begin(), received.end());
        if (!is_member(std::span<const T>(word))) {
            throw NotACodeword("received word of length n is not a codeword");
        }
        return word;
    }

    std::optional<std::vector<T>> found;
    std::vector<T> candidate;
    candidate.reserve(n);
    auto consider = [&]() {
        if (!is_member(std::span<const T>(candidate))) {
            return;
        }
        if (found) {
            throw AmbiguousCorrection("more than one codeword is one edit away from the received word");
        }
        found = candidate;
    };

    if (len + 1 == n) {
        for (std::size_t pos = 0; pos <= len; ++pos) {
            for (T sym = 0; sym < alphabet_size; ++sym) {
                if (pos > 0 && received[pos - 1] == sym) {
                    continue;
                }
                candidate.assign(received.begin(), received.begin() + static_cast<std::ptrdiff_t>(pos));
                candidate.push_back(sym);
                candidate.insert(candidate.end(), received.begin() + static_cast<std::ptrdiff_t>(pos),
                                 received.end());
                consider();
            }
        }
    } else {
        for (std::size_t pos = 0; pos < len; ++pos) {
            if (pos > 0 && received[pos - 1] == received[pos]) {
                continue;
            }
            candidate.assign(received.begin(), received.begin() + static_cast<std::ptrdiff_t>(pos));
            candidate.insert(candidate.end(), received.begin() + static_cast<std::ptrdiff_t>(pos + 1),
                             received.end());
            consider();
        }
    }

    if (!found) {
        throw NoCandidate("no codeword is reachable from the received word by a single edit");
    }
    return *std::move(found);
}

} // namespace vtcodes::detail
