#include "vtcodes/cli.hpp"

#include "vtcodes/analysis.hpp"
#include "vtcodes/binary.hpp"
#include "vtcodes/channel.hpp"
#include "vtcodes/error.hpp"
#include "vtcodes/qary.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <iostream>
#include <sstream>

namespace vtcodes::cli {

namespace {

using nlohmann::json;

struct Options {
    Symbol q = 0;
    std::size_t n = 0;
    std::uint64_t a = 0;
    Symbol b = 0;
    bool json = false;
    std::string message;
    std::string word;
    std::uint64_t seed = 0;
    std::uint64_t trials = 1000;
    std::string channel = "mixed";
    unsigned workers = 1;
    std::uint64_t limit = 0;
    std::string positions;
};

std::string trim(std::string text) {
    const auto not_space = [](unsigned char c) { return !std::isspace(c); };
    text.erase(text.begin(), std::find_if(text.begin(), text.end(), not_space));
    text.erase(std::find_if(text.rbegin(), text.rend(), not_space).base(), text.end());
    return text;
}

std::string read_all(std::istream &in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return trim(buf.str());
}

bool has_space(const std::string &text) {
    return std::any_of(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); });
}

// Binary words accept either contiguous bits or space-separated symbols.
BinaryWord parse_binary_word(const std::string &text) {
    if (!has_space(text)) {
        return BinaryWord::from_string(text);
    }
    const auto word = QaryWord::from_string(text, 2);
    return BinaryWord(std::vector<std::uint8_t>(word.symbols().begin(), word.symbols().end()));
}

std::string symbols_of(const BinaryWord &word) {
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i != 0) {
            out.push_back(' ');
        }
        out.push_back(static_cast<char>('0' + word[i]));
    }
    return out;
}

json symbol_array(const BinaryWord &word) {
    return json(std::vector<int>(word.bits().begin(), word.bits().end()));
}

json symbol_array(const QaryWord &word) {
    return json(std::vector<Symbol>(word.symbols().begin(), word.symbols().end()));
}

std::string edit_name(std::size_t received, std::size_t n) {
    if (received + 1 == n) {
        return "deletion";
    }
    if (received == n + 1) {
        return "insertion";
    }
    return "none";
}

class Dispatcher {
  public:
    Dispatcher(std::istream &in, std::ostream &out) : in_(in), out_(out) {}

    void encode() {
        const auto text = input(opt.message);
        if (binary()) {
            const BinaryVtParams p(opt.n, opt.a);
            const auto c = encode_binary(BinaryWord::from_string(text), p);
            emit(symbols_of(c), {{"q", 2}, {"n", opt.n}, {"a", opt.a}, {"codeword", symbol_array(c)}});
        } else {
            const QaryVtParams p(opt.n, opt.q, opt.a, opt.b);
            const auto c = encode_q(BinaryWord::from_string(text), p);
            emit(c.to_string(),
                 {{"q", opt.q}, {"n", opt.n}, {"a", opt.a}, {"b", opt.b}, {"codeword", symbol_array(c)}});
        }
    }

    void extract() {
        const auto text = input(opt.word);
        std::string message;
        if (binary()) {
            const BinaryVtParams p(opt.n, opt.a);
            message = extract_binary(parse_binary_word(text), p).to_string();
        } else {
            const QaryVtParams p(opt.n, opt.q, opt.a, opt.b);
            message = extract_q(QaryWord::from_string(text, opt.q), p).to_string();
        }
        emit(message, {{"message", message}});
    }

    void correct() {
        const auto text = input(opt.word);
        if (binary()) {
            const BinaryVtParams p(opt.n, opt.a);
            const auto r = parse_binary_word(text);
            const auto c = correct_binary(r, p);
            emit(symbols_of(c), {{"codeword", symbol_array(c)}, {"edit", edit_name(r.size(), opt.n)}});
        } else {
            const QaryCode code(opt.n, opt.q, opt.a, opt.b);
            const auto r = QaryWord::from_string(text, opt.q);
            const auto c = correct_q(r, code);
            emit(c.to_string(), {{"codeword", symbol_array(c)}, {"edit", edit_name(r.size(), opt.n)}});
        }
    }

    void member() {
        const auto text = input(opt.word);
        bool result = false;
        json detail;
        if (binary()) {
            const auto w = parse_binary_word(text);
            if (w.size() != opt.n) {
                throw ParameterError("word length does not match --n");
            }
            result = is_member(w, opt.a);
            detail = {{"syndrome", syndrome(w)}};
        } else {
            const QaryCode code(opt.n, opt.q, opt.a, opt.b);
            const auto w = QaryWord::from_string(text, opt.q);
            result = is_member_q(w, code);
            detail = {{"aux_syndrome", aux_syndrome(w)}, {"sum", mod_sum(w)}};
        }
        detail["member"] = result;
        emit(result ? "true" : "false", detail);
    }

    void enumerate() {
        EnumerationLimits limits;
        limits.workers = opt.workers;
        if (opt.limit != 0) {
            if (binary()) {
                limits.max_binary_length = static_cast<std::size_t>(opt.limit);
            } else {
                limits.max_qary_words = opt.limit;
            }
        }
        const auto rows = census_rows(opt.n, opt.q, limits);
        if (opt.json) {
            out_ << census_json(rows) << '\n';
        } else {
            write_census_csv(out_, rows);
        }
    }

    void bounds() {
        const auto report = rate_bounds(opt.n, opt.q);
        json doc = json::parse(rate_report_json(report));
        if (binary()) {
            const auto b = binary_size_bounds(opt.n);
            doc["size_lower"] = b.lower;
            doc["size_centre"] = b.centre;
            doc["size_upper"] = b.upper;
        } else {
            doc["size_lower_bound"] = qary_size_lower_bound(opt.n, opt.q).str();
            doc["size_upper_bound"] = single_deletion_size_upper_bound(opt.n, opt.q).str();
        }
        if (opt.json) {
            out_ << doc.dump() << '\n';
            return;
        }
        for (const auto &[key, value] : doc.items()) {
            if (value.is_null()) {
                continue;
            }
            out_ << key << '=' << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
        }
    }

    void simulate() {
        const auto kind = parse_channel_kind(opt.channel);
        const CodeParams params = binary() ? CodeParams(BinaryVtParams(opt.n, opt.a))
                                           : CodeParams(QaryVtParams(opt.n, opt.q, opt.a, opt.b));
        const auto report = run_trials(params, kind, opt.trials, opt.seed, opt.workers);
        if (opt.json) {
            out_ << trial_report_json(report, params, kind, opt.seed) << '\n';
        } else {
            out_ << "trials=" << report.trials << "\nsuccesses=" << report.successes
                 << "\nrate=" << report.success_rate() << '\n';
            for (const auto &f : report.failures) {
                out_ << "failure trial=" << f.trial << " message=" << f.message << " event=" << to_string(f.event.kind)
                     << '@' << f.event.position << (f.error.empty() ? "" : " error=" + f.error) << '\n';
            }
        }
        if (report.successes != report.trials) {
            throw CodecError(std::to_string(report.trials - report.successes) + " trial(s) failed");
        }
    }

    void tables() {
        const PairTable table(opt.q);
        json pairs = json::array();
        json c5 = json::array();
        for (std::size_t i = 0; i < table.pair_count(); ++i) {
            const auto [r, l] = table.pair(i);
            pairs.push_back({i, r, l});
        }
        for (std::size_t i = 0; i < table.c5_count(); ++i) {
            c5.push_back({i, table.c5_value(i)});
        }
        if (opt.json) {
            out_ << json{{"q", opt.q}, {"pairs", pairs}, {"c5", c5}}.dump() << '\n';
            return;
        }
        for (const auto &p : pairs) {
            out_ << "pair " << p[0] << ' ' << p[1] << ' ' << p[2] << '\n';
        }
        for (const auto &v : c5) {
            out_ << "c5 " << v[0] << ' ' << v[1] << '\n';
        }
    }

    void validate_positions() {
        std::vector<std::size_t> positions;
        std::istringstream in(opt.positions);
        std::string token;
        while (in >> token) {
            std::size_t value = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc{} || ptr != token.data() + token.size()) {
                throw ParameterError("invalid position '" + token + "'");
            }
            positions.push_back(value);
        }
        const bool ok = validate_syndrome_positions(opt.n, positions);
        emit(ok ? "true" : "false", {{"n", opt.n}, {"valid", ok}});
    }

    Options opt;

  private:
    bool binary() const {
        if (opt.q == 2 && opt.b != 0) {
            throw ParameterError("--b is not used by binary codes");
        }
        return opt.q == 2;
    }

    std::string input(const std::string &flag_value) {
        return flag_value.empty() ? read_all(in_) : trim(flag_value);
    }

    void emit(const std::string &text, const json &doc) {
        if (opt.json) {
            out_ << doc.dump() << '\n';
        } else {
            out_ << text << '\n';
        }
    }

    std::istream &in_;
    std::ostream &out_;
};

} // namespace

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) {
    Dispatcher dispatcher(in, out);
    Options &opt = dispatcher.opt;

    CLI::App app{"Varshamov-Tenengolts codes: encode, extract, correct and analyse"};
    app.require_subcommand(1);

    auto add_code = [&](CLI::App *cmd, bool with_sum) {
        cmd->add_option("--q", opt.q, "alphabet size (2 selects the binary code)")->required();
        cmd->add_option("--n", opt.n, "code length")->required();
        cmd->add_option("--a", opt.a, "syndrome (binary) or auxiliary syndrome (q-ary)");
        if (with_sum) {
            cmd->add_option("--b", opt.b, "modular sum (q-ary only)");
        }
        cmd->add_flag("--json", opt.json, "machine-readable output");
    };

    std::vector<std::pair<CLI::App *, std::function<void()>>> commands;
    auto sub = [&](const std::string &name, const std::string &help, std::function<void()> action) {
        auto *cmd = app.add_subcommand(name, help);
        commands.emplace_back(cmd, std::move(action));
        return cmd;
    };

    auto *encode = sub("encode", "encode a bit-string message", [&] { dispatcher.encode(); });
    add_code(encode, true);
    encode->add_option("--message", opt.message, "message bits (read from stdin if omitted)");

    auto *extract = sub("extract", "recover the message from a codeword", [&] { dispatcher.extract(); });
    add_code(extract, true);
    extract->add_option("--word", opt.word, "codeword symbols (read from stdin if omitted)");

    auto *correct = sub("correct", "undo a single deletion or insertion", [&] { dispatcher.correct(); });
    add_code(correct, true);
    correct->add_option("--word", opt.word, "received symbols (read from stdin if omitted)");

    auto *member = sub("member", "test code membership", [&] { dispatcher.member(); });
    add_code(member, true);
    member->add_option("--word", opt.word, "word symbols (read from stdin if omitted)");

    auto *enumerate = sub("enumerate", "count every code of length n by enumeration", [&] { dispatcher.enumerate(); });
    enumerate->add_option("--q", opt.q, "alphabet size")->required();
    enumerate->add_option("--n", opt.n, "code length")->required();
    enumerate->add_option("--limit", opt.limit, "max length (binary) or max word count (q-ary)");
    enumerate->add_option("--workers", opt.workers, "worker threads");
    enumerate->add_flag("--json", opt.json, "JSON instead of CSV");

    auto *bounds = sub("bounds", "rate and size bounds", [&] { dispatcher.bounds(); });
    bounds->add_option("--q", opt.q, "alphabet size")->required();
    bounds->add_option("--n", opt.n, "code length")->required();
    bounds->add_flag("--json", opt.json, "machine-readable output");

    auto *simulate = sub("simulate", "encode, corrupt, correct, extract", [&] { dispatcher.simulate(); });
    add_code(simulate, true);
    simulate->add_option("--trials", opt.trials, "number of trials");
    simulate->add_option("--seed", opt.seed, "base seed");
    simulate->add_option("--channel", opt.channel, "deletion | insertion | mixed");
    simulate->add_option("--workers", opt.workers, "worker threads");

    auto *tables = sub("tables", "dump the canonical pair and c5 tables", [&] { dispatcher.tables(); });
    tables->add_option("--q", opt.q, "alphabet size")->required();
    tables->add_flag("--json", opt.json, "machine-readable output");

    auto *positions = sub("validate-positions", "check a set of syndrome positions",
                          [&] { dispatcher.validate_positions(); });
    positions->add_option("--n", opt.n, "code length")->required();
    positions->add_option("--positions", opt.positions, "space-separated 1-based positions")->required();
    positions->add_flag("--json", opt.json, "machine-readable output");

    std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(reversed.begin(), reversed.end());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    try {
        for (auto &[cmd, action] : commands) {
            if (cmd->parsed()) {
                action();
            }
        }
    } catch (const ParameterError &e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const CodecError &e) {
        err << "error: " << e.what() << '\n';
        return kCodecFailure;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kCodecFailure;
    }
    return kSuccess;
}

} // namespace vtcodes::cli
