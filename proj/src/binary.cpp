#include "vtcodes/binary.hpp"

#include "vtcodes/detail/edit_search.hpp"
#include "vtcodes/error.hpp"

#include <bit>
#include <string>

namespace vtcodes {

namespace {

bool is_dyadic(std::size_t position) noexcept {
    return position != 0 && std::has_single_bit(position);
}

} // namespace

std::size_t binary_parity_bits(std::size_t n) noexcept {
    // ceil(log2(n + 1))
    return static_cast<std::size_t>(std::bit_width(n));
}

BinaryVtParams::BinaryVtParams(std::size_t n, std::uint64_t a) : n_(n), a_(a), t_(binary_parity_bits(n)) {
    if (n == 0) {
        throw ParameterError("code length must be at least 1");
    }
    if (a > n) {
        throw ParameterError("syndrome a = " + std::to_string(a) + " must lie in 0.." + std::to_string(n));
    }
    message_positions_.reserve(n_ - t_);
    for (std::size_t pos = 1; pos <= n_; ++pos) {
        if (!is_dyadic(pos)) {
            message_positions_.push_back(pos);
        }
    }
}

std::uint64_t vt_syndrome(std::span<const std::uint8_t> bits) noexcept {
    const std::uint64_t modulus = bits.size() + 1;
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != 0) {
            sum += i + 1;
        }
    }
    return sum % modulus;
}

std::uint64_t syndrome(const BinaryWord &word) noexcept {
    return vt_syndrome(word.bits());
}

bool is_member(const BinaryWord &word, std::uint64_t a) {
    if (a > word.size()) {
        throw ParameterError("syndrome a = " + std::to_string(a) + " must lie in 0.." + std::to_string(word.size()));
    }
    return syndrome(word) == a;
}

std::uint64_t fill_dyadic_syndrome_bits(std::span<std::uint8_t> bits, std::uint64_t target) {
    const std::uint64_t modulus = bits.size() + 1;
    if (target >= modulus) {
        throw ParameterError("target syndrome out of range");
    }
    const std::uint64_t current = vt_syndrome(bits);
    const std::uint64_t deficiency = (target + modulus - current) % modulus;
    for (std::size_t i = 0; (std::size_t{1} << i) <= bits.size(); ++i) {
        bits[(std::size_t{1} << i) - 1] = static_cast<std::uint8_t>((deficiency >> i) & 1U);
    }
    return deficiency;
}

BinaryWord encode_binary(const BinaryWord &message, const BinaryVtParams &params) {
    const auto &positions = params.message_positions();
    if (message.size() != positions.size()) {
        throw ParameterError("message has " + std::to_string(message.size()) + " bits, expected " +
                             std::to_string(positions.size()));
    }
    std::vector<std::uint8_t> bits(params.length(), 0);
    for (std::size_t i = 0; i < positions.size(); ++i) {
        bits[positions[i] - 1] = message[i];
    }
    fill_dyadic_syndrome_bits(bits, params.syndrome());
    return BinaryWord(std::move(bits));
}

BinaryWord extract_binary(const BinaryWord &codeword, const BinaryVtParams &params) {
    if (codeword.size() != params.length()) {
        throw ParameterError("codeword has length " + std::to_string(codeword.size()) + ", expected " +
                             std::to_string(params.length()));
    }
    const auto &positions = params.message_positions();
    std::vector<std::uint8_t> message;
    message.reserve(positions.size());
    for (auto pos : positions) {
        message.push_back(codeword[pos - 1]);
    }
    return BinaryWord(std::move(message));
}

BinaryWord correct_binary(const BinaryWord &received, const BinaryVtParams &params) {
    const std::uint64_t a = params.syndrome();
    auto word = detail::correct_single_edit<std::uint8_t>(
        received.bits(), params.length(), 2,
        [a](std::span<const std::uint8_t> candidate) { return vt_syndrome(candidate) == a; });
    return BinaryWord(std::move(word));
}

BinaryWord correct_binary_deletion_fast(const BinaryWord &received, const BinaryVtParams &params) {
    const std::size_t n = params.length();
    if (received.size() + 1 != n) {
        throw ParameterError("fast decoder expects a word of length n - 1");
    }
    const std::uint64_t modulus = n + 1;
    std::uint64_t weight = 0;
    std::uint64_t checksum = 0;
    for (std::size_t i = 0; i < received.size(); ++i) {
        if (received[i] != 0) {
            ++weight;
            checksum += i + 1;
        }
    }
    const std::uint64_t deficiency = (params.syndrome() + modulus - checksum % modulus) % modulus;

    std::vector<std::uint8_t> out(received.bits().begin(), received.bits().end());
    if (deficiency <= weight) {
        // A 0 was deleted; exactly `deficiency` ones lie to its right.
        std::uint64_t ones_right = weight;
        std::size_t pos = 0;
        while (ones_right > deficiency) {
            if (out[pos] != 0) {
                --ones_right;
            }
            ++pos;
        }
        out.insert(out.begin() + static_cast<std::ptrdiff_t>(pos), 0);
    } else {
        // A 1 was deleted; exactly deficiency - weight - 1 zeros lie to its left.
        const std::uint64_t zeros_left = deficiency - weight - 1;
        std::uint64_t seen = 0;
        std::size_t pos = 0;
        while (seen < zeros_left) {
            if (pos >= out.size()) {
                throw NoCandidate("received word is not a single deletion of a codeword");
            }
            if (out[pos] == 0) {
                ++seen;
            }
            ++pos;
        }
        out.insert(out.begin() + static_cast<std::ptrdiff_t>(pos), 1);
    }
    return BinaryWord(std::move(out));
}

bool validate_syndrome_positions(std::size_t n, std::span<const std::size_t> positions) {
    if (positions.empty()) {
        throw ParameterError("position set must not be empty");
    }
    const std::size_t modulus = n + 1;
    std::vector<bool> used(modulus, false);
    for (auto p : positions) {
        if (p < 1 || p > n) {
            throw ParameterError("position " + std::to_string(p) + " outside 1.." + std::to_string(n));
        }
        if (used[p]) {
            throw ParameterError("duplicate position " + std::to_string(p));
        }
        used[p] = true;
    }

    std::vector<bool> reachable(modulus, false);
    reachable[0] = true;
    for (auto p : positions) {
        std::vector<bool> next = reachable;
        for (std::size_t r = 0; r < modulus; ++r) {
            if (reachable[r]) {
                next[(r + p) % modulus] = true;
            }
        }
        reachable = std::move(next);
    }
    for (bool r : reachable) {
        if (!r) {
            return false;
        }
    }
    return true;
}

} // namespace vtcodes
