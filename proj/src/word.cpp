#include "vtcodes/word.hpp"

#include "vtcodes/error.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace vtcodes {

BinaryWord::BinaryWord(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i] > 1) {
            throw ParameterError("binary word has non-binary value at index " + std::to_string(i));
        }
    }
}

BinaryWord BinaryWord::from_string(std::string_view text) {
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (char ch : text) {
        if (ch != '0' && ch != '1') {
            throw ParameterError("invalid character '" + std::string(1, ch) + "' in bit string");
        }
        bits.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
    return BinaryWord(std::move(bits));
}

BinaryWord BinaryWord::zeros(std::size_t length) {
    return BinaryWord(std::vector<std::uint8_t>(length, 0));
}

std::string BinaryWord::to_string() const {
    std::string out;
    out.reserve(bits_.size());
    for (auto b : bits_) {
        out.push_back(static_cast<char>('0' + b));
    }
    return out;
}

QaryWord::QaryWord(std::vector<Symbol> symbols, Symbol q) : symbols_(std::move(symbols)), q_(q) {
    if (q_ < 2) {
        throw ParameterError("alphabet size must be at least 2");
    }
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (symbols_[i] >= q_) {
            throw ParameterError("symbol " + std::to_string(symbols_[i]) + " at index " +
                                 std::to_string(i) + " is outside Z_" + std::to_string(q_));
        }
    }
}

QaryWord QaryWord::from_string(std::string_view text, Symbol q) {
    std::vector<Symbol> symbols;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
        if (pos == text.size()) {
            break;
        }
        std::size_t end = pos;
        while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) {
            ++end;
        }
        Symbol value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + end, value);
        if (ec != std::errc{} || ptr != text.data() + end) {
            throw ParameterError("invalid symbol '" + std::string(text.substr(pos, end - pos)) + "'");
        }
        symbols.push_back(value);
        pos = end;
    }
    return QaryWord(std::move(symbols), q);
}

std::string QaryWord::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (i != 0) {
            out << ' ';
        }
        out << symbols_[i];
    }
    return out.str();
}

} // namespace vtcodes
