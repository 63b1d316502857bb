#include "vtcodes/analysis.hpp"

#include "vtcodes/binary.hpp"
#include "vtcodes/error.hpp"
#include "vtcodes/qary.hpp"

#include "json.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <thread>

namespace vtcodes {

namespace {

using boost::multiprecision::pow;

void check_binary_limit(std::size_t n, const EnumerationLimits &limits) {
    if (n == 0) {
        throw ParameterError("code length must be at least 1");
    }
    const std::size_t cap = std::min(limits.max_binary_length, EnumerationLimits::kMaxBinaryLengthCap);
    if (n > cap) {
        throw ParameterError("binary enumeration limited to n <= " + std::to_string(cap));
    }
}

std::uint64_t qary_word_count(std::size_t n, Symbol q, const EnumerationLimits &limits) {
    if (q < 3) {
        throw ParameterError("q-ary enumeration needs q >= 3");
    }
    if (n == 0) {
        throw ParameterError("code length must be at least 1");
    }
    const std::uint64_t cap = std::min(limits.max_qary_words, EnumerationLimits::kMaxQaryWordsCap);
    const BigInt total = pow(BigInt(q), static_cast<unsigned>(n));
    if (total > cap) {
        throw ParameterError("q-ary enumeration limited to q^n <= " + std::to_string(cap));
    }
    return static_cast<std::uint64_t>(total);
}

// Splits [0, total) into contiguous ranges, one per worker, and sums the
// per-range tallies. Counting is associative so the result does not depend on
// the split.
template <typename Tally>
std::vector<std::uint64_t> partitioned_count(std::uint64_t total, std::size_t buckets, unsigned workers,
                                             Tally tally) {
    const std::uint64_t parts = std::clamp<std::uint64_t>(workers, 1, std::max<std::uint64_t>(total, 1));
    std::vector<std::vector<std::uint64_t>> partial(parts, std::vector<std::uint64_t>(buckets, 0));
    auto run = [&](std::uint64_t part) {
        const std::uint64_t lo = total * part / parts;
        const std::uint64_t hi = total * (part + 1) / parts;
        tally(lo, hi, partial[part]);
    };
    if (parts == 1) {
        run(0);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(parts);
        for (std::uint64_t p = 0; p < parts; ++p) {
            threads.emplace_back(run, p);
        }
        for (auto &th : threads) {
            th.join();
        }
    }
    std::vector<std::uint64_t> counts(buckets, 0);
    for (const auto &part : partial) {
        for (std::size_t i = 0; i < buckets; ++i) {
            counts[i] += part[i];
        }
    }
    return counts;
}

// Word index -> symbols, position 0 most significant.
void index_to_symbols(std::uint64_t index, Symbol q, std::vector<Symbol> &symbols) {
    for (std::size_t i = symbols.size(); i-- > 0;) {
        symbols[i] = static_cast<Symbol>(index % q);
        index /= q;
    }
}

void next_symbols(Symbol q, std::vector<Symbol> &symbols) {
    for (std::size_t i = symbols.size(); i-- > 0;) {
        if (++symbols[i] < q) {
            return;
        }
        symbols[i] = 0;
    }
}

std::size_t qary_parity(std::size_t n) {
    return static_cast<std::size_t>(std::bit_width(n - 1));
}

std::string format_fixed(double value) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(6) << value;
    return out.str();
}

double round6(double value) {
    return std::round(value * 1e6) / 1e6;
}

} // namespace

std::vector<std::uint64_t> binary_census(std::size_t n, const EnumerationLimits &limits) {
    check_binary_limit(n, limits);
    const std::uint64_t total = std::uint64_t{1} << n;
    const std::uint64_t modulus = n + 1;
    return partitioned_count(total, n + 1, limits.workers,
                             [n, modulus](std::uint64_t lo, std::uint64_t hi, std::vector<std::uint64_t> &counts) {
                                 for (std::uint64_t x = lo; x < hi; ++x) {
                                     std::uint64_t sum = 0;
                                     for (std::size_t i = 0; i < n; ++i) {
                                         if ((x >> (n - 1 - i)) & 1U) {
                                             sum += i + 1;
                                         }
                                     }
                                     ++counts[sum % modulus];
                                 }
                             });
}

std::uint64_t enumerate_binary(std::size_t n, std::uint64_t a, const EnumerationLimits &limits) {
    if (a > n) {
        throw ParameterError("syndrome a must lie in 0..n");
    }
    return binary_census(n, limits)[a];
}

std::vector<BinaryWord> list_binary_code(std::size_t n, std::uint64_t a, const EnumerationLimits &limits) {
    check_binary_limit(n, limits);
    if (a > n) {
        throw ParameterError("syndrome a must lie in 0..n");
    }
    std::vector<BinaryWord> out;
    std::vector<std::uint8_t> bits(n);
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
        for (std::size_t i = 0; i < n; ++i) {
            bits[i] = static_cast<std::uint8_t>((x >> (n - 1 - i)) & 1U);
        }
        if (vt_syndrome(bits) == a) {
            out.emplace_back(bits);
        }
    }
    return out;
}

QaryCensus qary_census(std::size_t n, Symbol q, const EnumerationLimits &limits) {
    const std::uint64_t total = qary_word_count(n, q, limits);
    QaryCensus census{n, q, {}};
    census.counts = partitioned_count(
        total, n * q, limits.workers, [n, q](std::uint64_t lo, std::uint64_t hi, std::vector<std::uint64_t> &counts) {
            std::vector<Symbol> word(n);
            index_to_symbols(lo, q, word);
            for (std::uint64_t x = lo; x < hi; ++x) {
                std::uint64_t syn = 0;
                std::uint64_t sum = word[0];
                for (std::size_t i = 1; i < n; ++i) {
                    sum += word[i];
                    if (word[i] >= word[i - 1]) {
                        syn += i;
                    }
                }
                ++counts[(syn % n) * q + sum % q];
                next_symbols(q, word);
            }
        });
    return census;
}

std::uint64_t enumerate_q(std::size_t n, Symbol q, std::uint64_t a, Symbol b, const EnumerationLimits &limits) {
    const QaryCode code(n, q, a, b);
    return qary_census(code.length(), q, limits).at(a, b);
}

std::vector<QaryWord> list_qary_code(std::size_t n, Symbol q, std::uint64_t a, Symbol b,
                                     const EnumerationLimits &limits) {
    const QaryCode code(n, q, a, b);
    const std::uint64_t total = qary_word_count(n, q, limits);
    std::vector<QaryWord> out;
    std::vector<Symbol> word(n, 0);
    for (std::uint64_t x = 0; x < total; ++x) {
        QaryWord candidate(word, q);
        if (is_member_q(candidate, code)) {
            out.push_back(std::move(candidate));
        }
        next_symbols(q, word);
    }
    return out;
}

BigInt prop1_lower_bound(std::size_t n, Symbol q) {
    if (n < 6 || q < 4) {
        throw ParameterError("the lower bound applies for n >= 6 and q >= 4");
    }
    const std::size_t t = qary_parity(n);
    if (n + 3 < 3 * t) {
        throw ParameterError("the lower bound needs n - 3t + 3 >= 0");
    }
    return pow(BigInt(q - 1), static_cast<unsigned>(2 * t - 5)) * pow(BigInt(q), static_cast<unsigned>(n + 3 - 3 * t));
}

BigInt ternary_lower_bound(std::size_t n) {
    if (n < 6) {
        throw ParameterError("the ternary lower bound applies for n >= 6");
    }
    const std::size_t t = qary_parity(n);
    if (n + 3 < 3 * t) {
        throw ParameterError("the lower bound needs n - 3t + 3 >= 0");
    }
    return pow(BigInt(2), static_cast<unsigned>(2 * (t - 3))) * pow(BigInt(3), static_cast<unsigned>(n + 3 - 3 * t));
}

BigInt qary_size_lower_bound(std::size_t n, Symbol q) {
    return q == 3 ? ternary_lower_bound(n) : prop1_lower_bound(n, q);
}

BigInt single_deletion_size_upper_bound(std::size_t n, Symbol q) {
    if (n < 2 || q < 2) {
        throw ParameterError("the single-deletion bound needs n >= 2 and q >= 2");
    }
    return (pow(BigInt(q), static_cast<unsigned>(n)) - q) / (BigInt(q - 1) * (n - 1));
}

BinarySizeBounds binary_size_bounds(std::size_t n) {
    if (n == 0) {
        throw ParameterError("code length must be at least 1");
    }
    const double centre = std::ldexp(1.0, static_cast<int>(n)) / static_cast<double>(n + 1);
    const double slack = std::exp2(static_cast<double>(n + 1) / 3.0);
    return {centre, centre - slack, centre + slack};
}

RateReport rate_bounds(std::size_t n, Symbol q) {
    RateReport r;
    r.n = n;
    r.q = q;
    const double nd = static_cast<double>(n);
    if (q == 2) {
        const BinaryVtParams params(n, 0);
        r.k = params.message_bits();
        r.encoder_rate = static_cast<double>(r.k) / nd;
        r.encoder_rate_formula = 1.0 - static_cast<double>(params.parity_bits()) / nd;
        r.rmin_upper = 1.0 - std::log2(nd + 1) / nd;
        r.rmax_upper = 1.0 - std::log2(nd - 1) / nd;
        return r;
    }

    r.k = message_length(n, q);
    const double lq = std::log2(static_cast<double>(q));
    const double lq1 = std::log2(static_cast<double>(q - 1));
    const double t = static_cast<double>(qary_parity(n));
    r.encoder_rate = static_cast<double>(r.k) / nd;
    r.encoder_rate_formula = std::has_single_bit(q) ? lq - t * (lq + 1) / nd - (2 * lq - 2) / nd : r.encoder_rate;
    r.rmin_upper = lq - std::log2(nd) / nd - lq / nd;
    r.rmax_upper = lq - std::log2(nd - 1) / nd - lq1 / nd;
    if (q >= 4) {
        r.rmin_lower = lq - t * (3 * lq - 2 * lq1) / nd - (5 * lq1 - 3 * lq) / nd;
    } else {
        r.ternary_rate_floor = std::log2(3.0) - 2.76 * t / nd - 2.25 / nd;
    }
    const BigInt bound = qary_size_lower_bound(n, q);
    // log2 of a big integer: msb plus the log of the leading 53 bits.
    const auto msb = static_cast<double>(boost::multiprecision::msb(bound));
    const unsigned shift = msb > 52 ? static_cast<unsigned>(msb - 52) : 0;
    r.prop1_rate = (std::log2(static_cast<double>(BigInt(bound >> shift))) + shift) / nd;
    return r;
}

std::vector<CodeCensus> census_rows(std::size_t n, Symbol q, const EnumerationLimits &limits) {
    std::vector<CodeCensus> rows;
    if (q == 2) {
        const auto counts = binary_census(n, limits);
        const auto bounds = binary_size_bounds(n);
        for (std::uint64_t a = 0; a <= n; ++a) {
            rows.push_back({n, 2, a, std::nullopt, counts[a], bounds.lower, bounds.upper});
        }
        return rows;
    }
    const auto census = qary_census(n, q, limits);
    std::optional<double> lower;
    if (n >= 6 && n + 3 >= 3 * qary_parity(n)) {
        lower = static_cast<double>(qary_size_lower_bound(n, q));
    }
    std::optional<double> upper;
    if (n >= 2) {
        upper = static_cast<double>(single_deletion_size_upper_bound(n, q));
    }
    for (std::uint64_t a = 0; a < n; ++a) {
        for (Symbol b = 0; b < q; ++b) {
            rows.push_back({n, q, a, b, census.at(a, b), lower, upper});
        }
    }
    return rows;
}

void write_census_csv(std::ostream &out, const std::vector<CodeCensus> &rows) {
    // q-ary bounds are integers; the binary window is real-valued.
    auto bound = [](const CodeCensus &row, const std::optional<double> &v) -> std::string {
        if (!v) {
            return {};
        }
        if (row.b) {
            std::ostringstream s;
            s << std::fixed << std::setprecision(0) << *v;
            return s.str();
        }
        return format_fixed(*v);
    };
    out << kCensusCsvHeader << '\n';
    for (const auto &row : rows) {
        out << row.q << ',' << row.n << ',' << row.a << ',';
        if (row.b) {
            out << *row.b;
        }
        out << ',' << row.size << ',' << bound(row, row.bound_lower) << ',' << bound(row, row.bound_upper) << '\n';
    }
}

std::string census_json(const std::vector<CodeCensus> &rows, int indent) {
    nlohmann::json doc;
    if (!rows.empty()) {
        doc["parameters"] = {{"n", rows.front().n}, {"q", rows.front().q}};
    }
    nlohmann::json counts = nlohmann::json::array();
    std::uint64_t total = 0;
    for (const auto &row : rows) {
        nlohmann::json entry = {{"a", row.a}, {"count", row.size}};
        entry["b"] = row.b ? nlohmann::json(*row.b) : nlohmann::json(nullptr);
        entry["bound_lower"] = row.bound_lower ? nlohmann::json(row.b ? *row.bound_lower : round6(*row.bound_lower))
                                               : nlohmann::json(nullptr);
        entry["bound_upper"] = row.bound_upper ? nlohmann::json(row.b ? *row.bound_upper : round6(*row.bound_upper))
                                               : nlohmann::json(nullptr);
        total += row.size;
        counts.push_back(std::move(entry));
    }
    doc["counts"] = std::move(counts);
    doc["total"] = total;
    if (!rows.empty()) {
        try {
            doc["rates"] = nlohmann::json::parse(rate_report_json(rate_bounds(rows.front().n, rows.front().q)));
        } catch (const ParameterError &) {
            doc["rates"] = nullptr;
        }
    }
    return doc.dump(indent);
}

std::string rate_report_json(const RateReport &r, int indent) {
    auto opt = [](const std::optional<double> &v) { return v ? nlohmann::json(round6(*v)) : nlohmann::json(nullptr); };
    nlohmann::json doc = {
        {"n", r.n},
        {"q", r.q},
        {"k", r.k},
        {"encoder_rate", round6(r.encoder_rate)},
        {"encoder_rate_formula", round6(r.encoder_rate_formula)},
        {"rmin_upper", round6(r.rmin_upper)},
        {"rmin_lower", opt(r.rmin_lower)},
        {"rmax_upper", round6(r.rmax_upper)},
        {"prop1_rate", opt(r.prop1_rate)},
        {"ternary_rate_floor", opt(r.ternary_rate_floor)},
    };
    return doc.dump(indent);
}

} // namespace vtcodes
