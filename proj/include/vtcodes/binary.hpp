#pragma once

#include "vtcodes/word.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace vtcodes {

/// Parameters of the binary code VT_a(n) and its systematic encoder.
///
/// The encoder reserves the t = ceil(log2(n+1)) dyadic positions 1, 2, 4, ...
/// (1-based) for syndrome bits and carries k = n - t message bits in the
/// remaining positions.
class BinaryVtParams {
  public:
    BinaryVtParams(std::size_t n, std::uint64_t a);

    [[nodiscard]] std::size_t length() const noexcept { return n_; }
    [[nodiscard]] std::uint64_t syndrome() const noexcept { return a_; }
    [[nodiscard]] std::uint64_t modulus() const noexcept { return n_ + 1; }
    [[nodiscard]] std::size_t parity_bits() const noexcept { return t_; }
    [[nodiscard]] std::size_t message_bits() const noexcept { return n_ - t_; }

    /// 1-based non-dyadic positions in ascending order: 3, 5, 6, 7, 9, ...
    [[nodiscard]] const std::vector<std::size_t> &message_positions() const noexcept { return message_positions_; }

  private:
    std::size_t n_;
    std::uint64_t a_;
    std::size_t t_;
    std::vector<std::size_t> message_positions_;
};

/// sum_{i=1}^{len} i * bits[i-1] mod (len + 1)
[[nodiscard]] std::uint64_t vt_syndrome(std::span<const std::uint8_t> bits) noexcept;
[[nodiscard]] std::uint64_t syndrome(const BinaryWord &word) noexcept;

/// True iff syndrome(word) == a. Throws ParameterError if a > |word|.
[[nodiscard]] bool is_member(const BinaryWord &word, std::uint64_t a);

/// Number of dyadic positions needed to reach every residue mod (n + 1).
[[nodiscard]] std::size_t binary_parity_bits(std::size_t n) noexcept;

/// Fills the dyadic bits (1-based positions 2^i, i < parity) of `bits` with the
/// binary expansion of the deficiency so that vt_syndrome(bits) == target.
/// The dyadic entries must be zero on entry. Returns the deficiency.
std::uint64_t fill_dyadic_syndrome_bits(std::span<std::uint8_t> bits, std::uint64_t target);

[[nodiscard]] BinaryWord encode_binary(const BinaryWord &message, const BinaryVtParams &params);

/// Positional inverse of encode_binary; membership is not checked.
[[nodiscard]] BinaryWord extract_binary(const BinaryWord &codeword, const BinaryVtParams &params);

/// Recovers the codeword from a word with at most one deletion or insertion by
/// exhaustive candidate search. Throws NotACodeword, NoCandidate or
/// AmbiguousCorrection on failure, ParameterError on a bad length.
[[nodiscard]] BinaryWord correct_binary(const BinaryWord &received, const BinaryVtParams &params);

/// Linear-time Levenshtein decoder for a single deletion (|received| == n - 1).
[[nodiscard]] BinaryWord correct_binary_deletion_fast(const BinaryWord &received, const BinaryVtParams &params);

/// True iff subsets of `positions` (1-based, distinct, within 1..n) reach every
/// residue mod (n + 1).
[[nodiscard]] bool validate_syndrome_positions(std::size_t n, std::span<const std::size_t> positions);

} // namespace vtcodes
