#pragma once

#include "vtcodes/binary.hpp"
#include "vtcodes/word.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace vtcodes {

/// Binary word alpha_1..alpha_{n-1} with alpha_i = 1 iff s_i >= s_{i-1}.
using AuxSequence = BinaryWord;

/// Definition of the q-ary code VT_{a,b}(n): words S over Z_q of length n with
/// syn(A_S) = a (mod n) and sum(S) = b (mod q).
class QaryCode {
  public:
    QaryCode(std::size_t n, Symbol q, std::uint64_t a, Symbol b);

    [[nodiscard]] std::size_t length() const noexcept { return n_; }
    [[nodiscard]] Symbol alphabet_size() const noexcept { return q_; }
    [[nodiscard]] std::uint64_t aux_syndrome() const noexcept { return a_; }
    [[nodiscard]] Symbol sum() const noexcept { return b_; }

  private:
    std::size_t n_;
    Symbol q_;
    std::uint64_t a_;
    Symbol b_;
};

/// Code positions (0-based) used by the systematic encoder for one (n, q).
struct QaryLayout {
    std::size_t parity_bits = 0;                // t = ceil(log2 n)
    std::vector<std::size_t> body_positions;    // neither dyadic, adjacent-pair, nor 0
    std::vector<std::size_t> pair_centres;      // 2^j for j = 3..t-1
    std::size_t body_bits = 0;                  // floor(|body| * log2 q)
    std::size_t pair_bits = 0;                  // floor(log2 (q-1)^2) per pair
    std::size_t c5_bits = 0;                    // floor(log2 (q-1)), 0 for q = 3
};

/// Encoder parameters for VT_{a,b}(n). Requires q >= 3, n >= 6, n != 2^m + 1 and
/// a positive message length.
class QaryVtParams {
  public:
    QaryVtParams(std::size_t n, Symbol q, std::uint64_t a, Symbol b);

    [[nodiscard]] const QaryCode &code() const noexcept { return code_; }
    [[nodiscard]] std::size_t length() const noexcept { return code_.length(); }
    [[nodiscard]] Symbol alphabet_size() const noexcept { return code_.alphabet_size(); }
    [[nodiscard]] std::uint64_t aux_syndrome() const noexcept { return code_.aux_syndrome(); }
    [[nodiscard]] Symbol sum() const noexcept { return code_.sum(); }
    [[nodiscard]] std::size_t parity_bits() const noexcept { return layout_.parity_bits; }
    [[nodiscard]] std::size_t message_bits() const noexcept {
        return layout_.body_bits + layout_.pair_centres.size() * layout_.pair_bits + layout_.c5_bits;
    }
    [[nodiscard]] const QaryLayout &layout() const noexcept { return layout_; }

  private:
    QaryCode code_;
    QaryLayout layout_;
};

[[nodiscard]] AuxSequence aux_sequence(const QaryWord &word);
[[nodiscard]] Symbol mod_sum(const QaryWord &word) noexcept;
[[nodiscard]] std::uint64_t aux_syndrome(const QaryWord &word);

/// Throws ParameterError if the word's length or alphabet differ from the code's.
[[nodiscard]] bool is_member_q(const QaryWord &word, const QaryCode &code);

/// Builds the encoder layout; throws ParameterError / UnsupportedLength.
[[nodiscard]] QaryLayout qary_layout(std::size_t n, Symbol q);

/// k, the number of message bits the encoder maps into one codeword.
[[nodiscard]] std::size_t message_length(std::size_t n, Symbol q);

using SymbolPair = std::pair<Symbol, Symbol>;

/// Lexicographic enumeration of T = {(r, l) : r != 0, l != r - 1} and of the
/// admissible c5 values {v : v != q - 2}.
class PairTable {
  public:
    explicit PairTable(Symbol q);

    [[nodiscard]] Symbol alphabet_size() const noexcept { return q_; }
    [[nodiscard]] std::size_t pair_count() const noexcept { return std::size_t{q_ - 1} * (q_ - 1); }
    [[nodiscard]] std::size_t c5_count() const noexcept { return q_ - 1; }

    [[nodiscard]] static bool in_pair_set(SymbolPair pair, Symbol q) noexcept;

    [[nodiscard]] SymbolPair pair(std::size_t index) const;
    [[nodiscard]] std::size_t pair_index(SymbolPair pair) const;
    [[nodiscard]] Symbol c5_value(std::size_t index) const;
    [[nodiscard]] std::size_t c5_index(Symbol value) const;

  private:
    Symbol q_;
};

[[nodiscard]] SymbolPair canonical_pair(Symbol q, std::size_t index);
[[nodiscard]] std::size_t canonical_pair_index(Symbol q, SymbolPair pair);

/// Three distinct symbols x < y < z.
struct PrefixTriple {
    Symbol x;
    Symbol y;
    Symbol z;
    friend bool operator==(const PrefixTriple &, const PrefixTriple &) = default;
};

/// Distinct x < y < z with x + y + z = w (mod q); requires q >= 4.
[[nodiscard]] PrefixTriple step6_triple(Symbol w, Symbol q);

/// Orders the triple as (c0, c1, c2) so that [c1 >= c0] = alpha1 and [c2 >= c1] = alpha2.
[[nodiscard]] std::array<Symbol, 3> arrange_prefix(const PrefixTriple &triple, bool alpha1, bool alpha2) noexcept;

/// Message expressed directly as the free symbols of the codeword.
struct SymbolMessage {
    std::vector<Symbol> body;       // one symbol per layout body position
    std::vector<SymbolPair> pairs;  // (c_{2^j-1}, c_{2^j+1}) for j = 3..t-1, each in T
    Symbol c5 = 0;                  // != q - 2; must be 2 when q = 3

    friend bool operator==(const SymbolMessage &, const SymbolMessage &) = default;
};

/// Intermediate values produced while encoding, for inspection and tests.
struct EncodingTrace {
    AuxSequence aux_prefill;          // auxiliary word with dyadic bits zeroed
    std::uint64_t prefill_syndrome = 0;
    std::uint64_t deficiency = 0;
    AuxSequence aux;                  // final auxiliary word
    Symbol w = 0;                     // required c0 + c1 + c2 (mod q)
    bool q3_rewrite = false;          // q = 3, alpha1 = alpha2 = 0 branch taken
};

/// Maps free symbols to the unique codeword of VT_{a,b}(n) the encoder assigns them.
[[nodiscard]] QaryWord encode_symbols(const SymbolMessage &message, const QaryVtParams &params,
                                      EncodingTrace *trace = nullptr);

/// Reads the free symbols back from their positions. No membership check.
[[nodiscard]] SymbolMessage read_symbols(const QaryWord &codeword, const QaryVtParams &params);

/// Splits a k-bit message into free symbols.
[[nodiscard]] SymbolMessage pack_message(const BinaryWord &message, const QaryVtParams &params);

/// Inverse of pack_message; throws CodecError for symbols no message maps to.
[[nodiscard]] BinaryWord unpack_message(const SymbolMessage &symbols, const QaryVtParams &params);

[[nodiscard]] QaryWord encode_q(const BinaryWord &message, const QaryVtParams &params,
                                EncodingTrace *trace = nullptr);

/// Throws NotACodeword for non-members and CodecError for members the encoder never produces.
[[nodiscard]] BinaryWord extract_q(const QaryWord &codeword, const QaryVtParams &params);

/// Recovers the codeword from a word with at most one deletion or insertion.
[[nodiscard]] QaryWord correct_q(const QaryWord &received, const QaryCode &code);

} // namespace vtcodes
