#include "vtcodes/qary.hpp"

#include "vtcodes/detail/edit_search.hpp"
#include "vtcodes/error.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <bit>
#include <string>

namespace vtcodes {

namespace {

using boost::multiprecision::cpp_int;

bool is_dyadic(std::size_t position) noexcept {
    return position != 0 && std::has_single_bit(position);
}

std::size_t floor_log2(const cpp_int &value) {
    return static_cast<std::size_t>(boost::multiprecision::msb(value));
}

bool member_symbols(std::span<const Symbol> word, std::uint64_t a, Symbol b, Symbol q) noexcept {
    const std::size_t n = word.size();
    std::uint64_t syn = 0;
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sum += word[i];
        if (i > 0 && word[i] >= word[i - 1]) {
            syn += i;
        }
    }
    return syn % n == a && sum % q == b;
}

void check_word(const QaryWord &word, const QaryCode &code) {
    if (word.size() != code.length()) {
        throw ParameterError("word has length " + std::to_string(word.size()) + ", code length is " +
                             std::to_string(code.length()));
    }
    if (word.alphabet_size() != code.alphabet_size()) {
        throw ParameterError("word alphabet Z_" + std::to_string(word.alphabet_size()) +
                             " does not match code alphabet Z_" + std::to_string(code.alphabet_size()));
    }
}

// Reads `count` bits starting at `offset` as a big-endian unsigned integer.
std::size_t read_index(const BinaryWord &bits, std::size_t offset, std::size_t count) {
    std::size_t value = 0;
    for (std::size_t i = 0; i < count; ++i) {
        value = (value << 1) | bits[offset + i];
    }
    return value;
}

void write_index(std::vector<std::uint8_t> &out, std::size_t value, std::size_t count) {
    for (std::size_t i = count; i-- > 0;) {
        out.push_back(static_cast<std::uint8_t>((value >> i) & 1U));
    }
}

} // namespace

QaryCode::QaryCode(std::size_t n, Symbol q, std::uint64_t a, Symbol b) : n_(n), q_(q), a_(a), b_(b) {
    if (q < 3) {
        throw ParameterError("q-ary VT codes need q >= 3");
    }
    if (n == 0) {
        throw ParameterError("code length must be at least 1");
    }
    if (a >= n) {
        throw ParameterError("auxiliary syndrome a = " + std::to_string(a) + " must lie in 0.." +
                             std::to_string(n - 1));
    }
    if (b >= q) {
        throw ParameterError("sum b = " + std::to_string(b) + " must lie in Z_" + std::to_string(q));
    }
}

QaryLayout qary_layout(std::size_t n, Symbol q) {
    if (q < 3) {
        throw ParameterError("the encoder needs q >= 3");
    }
    if (n < 6) {
        throw ParameterError("the encoder needs n >= 6");
    }
    QaryLayout layout;
    const std::size_t t = static_cast<std::size_t>(std::bit_width(n - 1));
    layout.parity_bits = t;
    if ((std::size_t{1} << (t - 1)) + 1 > n - 1) {
        throw UnsupportedLength("n = " + std::to_string(n) +
                                " has the form 2^m + 1; the last adjacent pair would fall outside the word");
    }

    std::vector<bool> reserved(n, false);
    reserved[0] = true;
    for (std::size_t i = 0; i < t; ++i) {
        reserved[std::size_t{1} << i] = true;
    }
    for (std::size_t j = 2; j < t; ++j) {
        const std::size_t centre = std::size_t{1} << j;
        reserved[centre - 1] = true;
        reserved[centre + 1] = true;
        if (j >= 3) {
            layout.pair_centres.push_back(centre);
        }
    }
    for (std::size_t pos = 1; pos < n; ++pos) {
        if (!reserved[pos]) {
            layout.body_positions.push_back(pos);
        }
    }

    const std::size_t m = layout.body_positions.size();
    if (m > 0) {
        layout.body_bits = floor_log2(boost::multiprecision::pow(cpp_int(q), static_cast<unsigned>(m)));
    }
    layout.pair_bits = floor_log2(cpp_int(q - 1) * (q - 1));
    layout.c5_bits = q == 3 ? 0 : floor_log2(cpp_int(q - 1));
    return layout;
}

QaryVtParams::QaryVtParams(std::size_t n, Symbol q, std::uint64_t a, Symbol b)
    : code_(n, q, a, b), layout_(qary_layout(n, q)) {
    if (message_bits() == 0) {
        throw ParameterError("the encoder carries no message bits at n = " + std::to_string(n) +
                             ", q = " + std::to_string(q));
    }
}

std::size_t message_length(std::size_t n, Symbol q) {
    const auto layout = qary_layout(n, q);
    const std::size_t k = layout.body_bits + layout.pair_centres.size() * layout.pair_bits + layout.c5_bits;
    if (k == 0) {
        throw ParameterError("the encoder carries no message bits at n = " + std::to_string(n) +
                             ", q = " + std::to_string(q));
    }
    return k;
}

AuxSequence aux_sequence(const QaryWord &word) {
    std::vector<std::uint8_t> bits;
    if (word.size() > 1) {
        bits.reserve(word.size() - 1);
        for (std::size_t i = 1; i < word.size(); ++i) {
            bits.push_back(word[i] >= word[i - 1] ? 1 : 0);
        }
    }
    return AuxSequence(std::move(bits));
}

Symbol mod_sum(const QaryWord &word) noexcept {
    std::uint64_t sum = 0;
    for (auto s : word.symbols()) {
        sum += s;
    }
    return static_cast<Symbol>(sum % word.alphabet_size());
}

std::uint64_t aux_syndrome(const QaryWord &word) {
    return syndrome(aux_sequence(word));
}

bool is_member_q(const QaryWord &word, const QaryCode &code) {
    check_word(word, code);
    return member_symbols(word.symbols(), code.aux_syndrome(), code.sum(), code.alphabet_size());
}

// ---------------------------------------------------------------------------
// Look-up tables

PairTable::PairTable(Symbol q) : q_(q) {
    if (q < 3) {
        throw ParameterError("pair table needs q >= 3");
    }
}

bool PairTable::in_pair_set(SymbolPair pair, Symbol q) noexcept {
    const auto [r, l] = pair;
    return r != 0 && r < q && l < q && l != r - 1;
}

SymbolPair PairTable::pair(std::size_t index) const {
    if (index >= pair_count()) {
        throw ParameterError("pair index " + std::to_string(index) + " out of range for q = " + std::to_string(q_));
    }
    const auto r = static_cast<Symbol>(index / (q_ - 1) + 1);
    const auto offset = static_cast<Symbol>(index % (q_ - 1));
    const Symbol l = offset < r - 1 ? offset : offset + 1;
    return {r, l};
}

std::size_t PairTable::pair_index(SymbolPair pair) const {
    if (!in_pair_set(pair, q_)) {
        throw ParameterError("pair (" + std::to_string(pair.first) + "," + std::to_string(pair.second) +
                             ") is not in T for q = " + std::to_string(q_));
    }
    const auto [r, l] = pair;
    return std::size_t{r - 1} * (q_ - 1) + (l < r - 1 ? l : l - 1);
}

Symbol PairTable::c5_value(std::size_t index) const {
    if (index >= c5_count()) {
        throw ParameterError("c5 index " + std::to_string(index) + " out of range for q = " + std::to_string(q_));
    }
    const auto v = static_cast<Symbol>(index);
    return v < q_ - 2 ? v : v + 1;
}

std::size_t PairTable::c5_index(Symbol value) const {
    if (value >= q_ || value == q_ - 2) {
        throw ParameterError("c5 value " + std::to_string(value) + " is not admissible for q = " +
                             std::to_string(q_));
    }
    return value < q_ - 2 ? value : value - 1;
}

SymbolPair canonical_pair(Symbol q, std::size_t index) {
    return PairTable(q).pair(index);
}

std::size_t canonical_pair_index(Symbol q, SymbolPair pair) {
    return PairTable(q).pair_index(pair);
}

PrefixTriple step6_triple(Symbol w, Symbol q) {
    if (q < 4) {
        throw ParameterError("three distinct symbols with a prescribed sum need q >= 4");
    }
    if (w >= q) {
        throw ParameterError("w must lie in Z_q");
    }
    if (w == 1) {
        return {0, 2, q - 1};
    }
    if (w == 2) {
        return {1, 2, q - 1};
    }
    return {0, 1, (w + q - 1) % q};
}

std::array<Symbol, 3> arrange_prefix(const PrefixTriple &t, bool alpha1, bool alpha2) noexcept {
    if (alpha1 && alpha2) {
        return {t.x, t.y, t.z};
    }
    if (!alpha1 && !alpha2) {
        return {t.z, t.y, t.x};
    }
    if (alpha1) {
        return {t.x, t.z, t.y};
    }
    return {t.y, t.x, t.z};
}

// ---------------------------------------------------------------------------
// Encoder

QaryWord encode_symbols(const SymbolMessage &message, const QaryVtParams &params, EncodingTrace *trace) {
    const auto &layout = params.layout();
    const std::size_t n = params.length();
    const Symbol q = params.alphabet_size();
    const std::size_t t = layout.parity_bits;

    if (message.body.size() != layout.body_positions.size()) {
        throw ParameterError("expected " + std::to_string(layout.body_positions.size()) + " body symbols, got " +
                             std::to_string(message.body.size()));
    }
    if (message.pairs.size() != layout.pair_centres.size()) {
        throw ParameterError("expected " + std::to_string(layout.pair_centres.size()) + " pairs, got " +
                             std::to_string(message.pairs.size()));
    }
    if (q == 3 ? message.c5 != 2 : (message.c5 >= q || message.c5 == q - 2)) {
        throw ParameterError("c5 = " + std::to_string(message.c5) + " is not admissible for q = " +
                             std::to_string(q));
    }

    std::vector<Symbol> c(n, 0);
    for (std::size_t i = 0; i < message.body.size(); ++i) {
        if (message.body[i] >= q) {
            throw ParameterError("body symbol outside Z_q");
        }
        c[layout.body_positions[i]] = message.body[i];
    }
    for (std::size_t i = 0; i < message.pairs.size(); ++i) {
        if (!PairTable::in_pair_set(message.pairs[i], q)) {
            throw ParameterError("adjacent pair is not in T");
        }
        const std::size_t centre = layout.pair_centres[i];
        c[centre - 1] = message.pairs[i].first;
        c[centre + 1] = message.pairs[i].second;
    }
    c[3] = q - 1;
    c[5] = message.c5;

    // aux[i - 1] holds alpha_i.
    std::vector<std::uint8_t> aux(n - 1, 0);
    for (std::size_t i = 1; i < n; ++i) {
        if (is_dyadic(i)) {
            continue;
        }
        if (i == 3) {
            aux[i - 1] = 1;  // c3 = q - 1 dominates whatever c2 becomes
        } else if (is_dyadic(i - 1)) {
            aux[i - 1] = c[i] >= c[i - 2] ? 1 : 0;
        } else {
            aux[i - 1] = c[i] >= c[i - 1] ? 1 : 0;
        }
    }
    if (trace != nullptr) {
        trace->aux_prefill = AuxSequence(aux);
        trace->prefill_syndrome = vt_syndrome(aux);
    }
    const std::uint64_t deficiency = fill_dyadic_syndrome_bits(aux, params.aux_syndrome());

    for (std::size_t j = 2; j < t; ++j) {
        const std::size_t centre = std::size_t{1} << j;
        c[centre] = aux[centre - 1] != 0 ? c[centre - 1] : c[centre - 1] - 1;
    }

    const bool alpha1 = aux[0] != 0;
    const bool alpha2 = aux[1] != 0;
    bool rewrite = false;
    if (q == 3 && !alpha1 && !alpha2) {
        // alpha_1 alpha_2 alpha_3 = 001 -> 110 keeps the syndrome (1 + 2 = 3).
        rewrite = true;
        aux[0] = 1;
        aux[1] = 1;
        aux[2] = 0;
        c[3] = 1;
        c[4] = aux[3] != 0 ? c[3] : c[3] - 1;
    }

    std::uint64_t tail = 0;
    for (std::size_t i = 3; i < n; ++i) {
        tail += c[i];
    }
    const auto w = static_cast<Symbol>((params.sum() + q - tail % q) % q);

    if (q >= 4) {
        const auto prefix = arrange_prefix(step6_triple(w, q), alpha1, alpha2);
        std::copy(prefix.begin(), prefix.end(), c.begin());
    } else if (alpha1 || rewrite) {
        // alpha1 = 1 (or rewritten to 1): c1 = 2, c2 = 2 when alpha2 = 1, else 1.
        c[1] = 2;
        c[2] = aux[1] != 0 ? 2 : 1;
        c[0] = (w + 3 * q - c[1] - c[2]) % q;
    } else {
        // alpha1 = 0, alpha2 = 1
        c[2] = 2;
        switch (w) {
        case 0: c[1] = 0; c[0] = 1; break;
        case 1: c[1] = 0; c[0] = 2; break;
        default: c[1] = 1; c[0] = 2; break;
        }
    }

    if (trace != nullptr) {
        trace->deficiency = deficiency;
        trace->aux = AuxSequence(std::move(aux));
        trace->w = w;
        trace->q3_rewrite = rewrite;
    }
    return QaryWord(std::move(c), q);
}

SymbolMessage read_symbols(const QaryWord &codeword, const QaryVtParams &params) {
    check_word(codeword, params.code());
    const auto &layout = params.layout();
    SymbolMessage out;
    out.body.reserve(layout.body_positions.size());
    for (auto pos : layout.body_positions) {
        out.body.push_back(codeword[pos]);
    }
    for (auto centre : layout.pair_centres) {
        out.pairs.emplace_back(codeword[centre - 1], codeword[centre + 1]);
    }
    out.c5 = codeword[5];
    return out;
}

SymbolMessage pack_message(const BinaryWord &message, const QaryVtParams &params) {
    const auto &layout = params.layout();
    const Symbol q = params.alphabet_size();
    if (message.size() != params.message_bits()) {
        throw ParameterError("message has " + std::to_string(message.size()) + " bits, expected " +
                             std::to_string(params.message_bits()));
    }

    SymbolMessage out;
    std::size_t offset = 0;

    cpp_int value = 0;
    for (; offset < layout.body_bits; ++offset) {
        value <<= 1;
        value |= message[offset];
    }
    out.body.assign(layout.body_positions.size(), 0);
    for (std::size_t i = out.body.size(); i-- > 0;) {
        out.body[i] = static_cast<Symbol>(value % q);
        value /= q;
    }

    const PairTable table(q);
    for (std::size_t i = 0; i < layout.pair_centres.size(); ++i) {
        out.pairs.push_back(table.pair(read_index(message, offset, layout.pair_bits)));
        offset += layout.pair_bits;
    }
    out.c5 = q == 3 ? 2 : table.c5_value(read_index(message, offset, layout.c5_bits));
    return out;
}

BinaryWord unpack_message(const SymbolMessage &symbols, const QaryVtParams &params) {
    const auto &layout = params.layout();
    const Symbol q = params.alphabet_size();
    if (symbols.body.size() != layout.body_positions.size() || symbols.pairs.size() != layout.pair_centres.size()) {
        throw ParameterError("symbol message does not match the encoder layout");
    }

    std::vector<std::uint8_t> bits;
    bits.reserve(params.message_bits());

    cpp_int value = 0;
    for (auto s : symbols.body) {
        if (s >= q) {
            throw ParameterError("body symbol outside Z_q");
        }
        value = value * q + s;
    }
    if ((value >> layout.body_bits) != 0) {
        throw CodecError("body symbols encode a value outside the message range");
    }
    for (std::size_t i = layout.body_bits; i-- > 0;) {
        bits.push_back(boost::multiprecision::bit_test(value, static_cast<unsigned>(i)) ? 1 : 0);
    }

    const PairTable table(q);
    for (const auto &pair : symbols.pairs) {
        if (!PairTable::in_pair_set(pair, q)) {
            throw CodecError("adjacent pair (" + std::to_string(pair.first) + "," + std::to_string(pair.second) +
                             ") is not in T");
        }
        const std::size_t index = table.pair_index(pair);
        if (index >> layout.pair_bits != 0) {
            throw CodecError("adjacent pair is outside the message look-up table");
        }
        write_index(bits, index, layout.pair_bits);
    }

    if (q == 3) {
        if (symbols.c5 != 2) {
            throw CodecError("c5 must be 2 for q = 3");
        }
    } else {
        if (symbols.c5 >= q || symbols.c5 == q - 2) {
            throw CodecError("c5 = " + std::to_string(symbols.c5) + " is not admissible");
        }
        const std::size_t index = table.c5_index(symbols.c5);
        if (index >> layout.c5_bits != 0) {
            throw CodecError("c5 is outside the message look-up table");
        }
        write_index(bits, index, layout.c5_bits);
    }
    return BinaryWord(std::move(bits));
}

QaryWord encode_q(const BinaryWord &message, const QaryVtParams &params, EncodingTrace *trace) {
    return encode_symbols(pack_message(message, params), params, trace);
}

BinaryWord extract_q(const QaryWord &codeword, const QaryVtParams &params) {
    if (!is_member_q(codeword, params.code())) {
        throw NotACodeword("word is not a member of the code");
    }
    return unpack_message(read_symbols(codeword, params), params);
}

QaryWord correct_q(const QaryWord &received, const QaryCode &code) {
    if (received.alphabet_size() != code.alphabet_size()) {
        throw ParameterError("received word alphabet does not match the code");
    }
    const std::uint64_t a = code.aux_syndrome();
    const Symbol b = code.sum();
    const Symbol q = code.alphabet_size();
    auto word = detail::correct_single_edit<Symbol>(
        received.symbols(), code.length(), q,
        [a, b, q](std::span<const Symbol> candidate) { return member_symbols(candidate, a, b, q); });
    return QaryWord(std::move(word), q);
}

} // namespace vtcodes
