#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vtcodes {

using Symbol = std::uint32_t;

// Binary sequence. Storage is 0-based; in syndrome arithmetic bit i (0-based)
// carries weight i + 1.
class BinaryWord {
  public:
    BinaryWord() = default;
    explicit BinaryWord(std::vector<std::uint8_t> bits);

    /// Parses a contiguous string of '0'/'1' characters, lowest index first.
    static BinaryWord from_string(std::string_view text);
    static BinaryWord zeros(std::size_t length);

    [[nodiscard]] std::size_t size() const noexcept { return bits_.size(); }
    [[nodiscard]] bool empty() const noexcept { return bits_.empty(); }
    [[nodiscard]] std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
    [[nodiscard]] std::span<const std::uint8_t> bits() const noexcept { return bits_; }

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const BinaryWord &, const BinaryWord &) = default;
    friend auto operator<=>(const BinaryWord &, const BinaryWord &) = default;

  private:
    std::vector<std::uint8_t> bits_;
};

// Sequence over Z_q, indexed from 0.
class QaryWord {
  public:
    QaryWord() = default;
    QaryWord(std::vector<Symbol> symbols, Symbol q);

    /// Parses whitespace-separated decimal symbols.
    static QaryWord from_string(std::string_view text, Symbol q);

    [[nodiscard]] std::size_t size() const noexcept { return symbols_.size(); }
    [[nodiscard]] bool empty() const noexcept { return symbols_.empty(); }
    [[nodiscard]] Symbol alphabet_size() const noexcept { return q_; }
    [[nodiscard]] Symbol operator[](std::size_t i) const { return symbols_[i]; }
    [[nodiscard]] std::span<const Symbol> symbols() const noexcept { return symbols_; }

    /// Space-separated decimal symbols.
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const QaryWord &, const QaryWord &) = default;
    friend auto operator<=>(const QaryWord &, const QaryWord &) = default;

  private:
    std::vector<Symbol> symbols_;
    Symbol q_ = 2;
};

} // namespace vtcodes
