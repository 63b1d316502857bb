#pragma once

#include "vtcodes/word.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace vtcodes {

using BigInt = boost::multiprecision::cpp_int;

/// Enumeration limits. Defaults keep every census at desk scale; the hard caps
/// below are the most the library accepts regardless of configuration.
struct EnumerationLimits {
    static constexpr std::size_t kMaxBinaryLengthCap = 32;
    static constexpr std::uint64_t kMaxQaryWordsCap = std::uint64_t{1} << 32;

    std::size_t max_binary_length = 20;
    std::uint64_t max_qary_words = std::uint64_t{1} << 24;
    unsigned workers = 1;
};

/// counts[a] = |VT_a(n)| for a = 0..n.
[[nodiscard]] std::vector<std::uint64_t> binary_census(std::size_t n, const EnumerationLimits &limits = {});
[[nodiscard]] std::uint64_t enumerate_binary(std::size_t n, std::uint64_t a, const EnumerationLimits &limits = {});
/// All codewords of VT_a(n) in lexicographic order.
[[nodiscard]] std::vector<BinaryWord> list_binary_code(std::size_t n, std::uint64_t a,
                                                       const EnumerationLimits &limits = {});

/// counts[a * q + b] = |VT_{a,b}(n)|.
struct QaryCensus {
    std::size_t n = 0;
    Symbol q = 0;
    std::vector<std::uint64_t> counts;

    [[nodiscard]] std::uint64_t at(std::uint64_t a, Symbol b) const { return counts.at(a * q + b); }
};

[[nodiscard]] QaryCensus qary_census(std::size_t n, Symbol q, const EnumerationLimits &limits = {});
[[nodiscard]] std::uint64_t enumerate_q(std::size_t n, Symbol q, std::uint64_t a, Symbol b,
                                        const EnumerationLimits &limits = {});
/// All codewords of VT_{a,b}(n) in lexicographic order.
[[nodiscard]] std::vector<QaryWord> list_qary_code(std::size_t n, Symbol q, std::uint64_t a, Symbol b,
                                                   const EnumerationLimits &limits = {});

/// (q-1)^(2t-5) q^(n-3t+3), t = ceil(log2 n). Requires n >= 6, q >= 4.
[[nodiscard]] BigInt prop1_lower_bound(std::size_t n, Symbol q);
/// 2^(2(t-3)) 3^(n-3t+3) for q = 3, n >= 6.
[[nodiscard]] BigInt ternary_lower_bound(std::size_t n);
/// Dispatches to the bound that applies to q.
[[nodiscard]] BigInt qary_size_lower_bound(std::size_t n, Symbol q);
/// Kulkarni-Kiyavash: floor((q^n - q) / ((q-1)(n-1))) for any single-deletion-correcting code, n >= 2.
[[nodiscard]] BigInt single_deletion_size_upper_bound(std::size_t n, Symbol q);

struct BinarySizeBounds {
    double centre;  // 2^n / (n+1)
    double lower;
    double upper;
};

/// 2^n/(n+1) -+ 2^((n+1)/3).
[[nodiscard]] BinarySizeBounds binary_size_bounds(std::size_t n);

struct RateReport {
    std::size_t n = 0;
    Symbol q = 0;
    std::size_t k = 0;
    double encoder_rate = 0;            // k / n
    double encoder_rate_formula = 0;    // closed form of the rate for power-of-two q; otherwise k / n
    double rmin_upper = 0;              // q-ary: log2 q - log2(n)/n - log2(q)/n; binary: 1 - log2(n+1)/n
    std::optional<double> rmin_lower;   // q >= 4: rate implied by the closed form of the lower size bound
    double rmax_upper = 0;              // log2 q - log2(n-1)/n - log2(q-1)/n
    std::optional<double> prop1_rate;   // q >= 3: log2(lower size bound) / n
    std::optional<double> ternary_rate_floor;  // q = 3: log2 3 - 2.76 t/n - 2.25/n
};

/// Rates for the encoder at (n, q); q = 2 selects the binary encoder.
[[nodiscard]] RateReport rate_bounds(std::size_t n, Symbol q);

/// One census row. For binary rows b is absent and the bounds are the
/// 2^n/(n+1) window; for q-ary rows they are the size lower bound (when
/// n >= 6) and the single-deletion upper bound.
struct CodeCensus {
    std::size_t n = 0;
    Symbol q = 2;
    std::uint64_t a = 0;
    std::optional<Symbol> b;
    std::uint64_t size = 0;
    std::optional<double> bound_lower;
    std::optional<double> bound_upper;
};

[[nodiscard]] std::vector<CodeCensus> census_rows(std::size_t n, Symbol q, const EnumerationLimits &limits = {});

/// Column order: q,n,a,b,count,bound_lower,bound_upper. Absent fields are empty.
inline constexpr const char *kCensusCsvHeader = "q,n,a,b,count,bound_lower,bound_upper";
void write_census_csv(std::ostream &out, const std::vector<CodeCensus> &rows);
[[nodiscard]] std::string census_json(const std::vector<CodeCensus> &rows, int indent = -1);
[[nodiscard]] std::string rate_report_json(const RateReport &report, int indent = -1);

} // namespace vtcodes
