#include "abelian/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "abelian/codecomp.hpp"
#include "abelian/error.hpp"
#include "abelian/numeration.hpp"
#include "abelian/oracle.hpp"
#include "abelian/sweep.hpp"

namespace abelian::cli {

namespace {

using nlohmann::json;

enum class Format { text, csv, json };

struct RunConfig {
    std::string sub;
    std::string sub_file;
    std::string format = "text";
    std::size_t cap = kDefaultLetterCap;
    std::string method = "codec";
};

class UsageError : public Error {
public:
    using Error::Error;
};

Format parse_format(const std::string& text) {
    if (text == "text") return Format::text;
    if (text == "csv") return Format::csv;
    if (text == "json") return Format::json;
    throw UsageError("unknown format '" + text + "'");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read substitution file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

ParrySubstitution substitution_from_document(const json& doc) {
    if (doc.contains("rules")) return ParrySubstitution::from_rules(doc.at("rules").get<std::string>());
    const auto kind = doc.at("kind").get<std::string>();
    const auto m = doc.at("m").get<unsigned>();
    const auto alpha = doc.at("alpha").get<std::vector<unsigned>>();
    if (kind == "simple") return ParrySubstitution::simple(m, alpha);
    if (kind == "nonsimple" || kind == "non-simple") {
        return ParrySubstitution::non_simple(m, doc.at("p").get<unsigned>(), alpha);
    }
    throw InvalidSubstitution("unknown kind '" + kind + "'");
}

ParrySubstitution load_substitution(const RunConfig& config) {
    if (config.sub.empty() == config.sub_file.empty()) {
        throw UsageError("give exactly one of --sub or --sub-file");
    }
    if (!config.sub.empty()) return ParrySubstitution::parse(config.sub);
    const std::string text = read_file(config.sub_file);
    const json doc = json::parse(text, nullptr, false);
    if (doc.is_object()) {
        try {
            return substitution_from_document(doc);
        } catch (const json::exception& e) {
            throw InvalidSubstitution(std::string("malformed substitution document: ") + e.what());
        }
    }
    auto first = text.find_first_not_of(" \t\r\n");
    auto last = text.find_last_not_of(" \t\r\n");
    if (first == std::string::npos) throw InvalidSubstitution("empty substitution file");
    return ParrySubstitution::parse(text.substr(first, last - first + 1));
}

BigInt parse_bigint(const std::string& text) {
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw UsageError("'" + text + "' is not a non-negative integer");
    }
    return BigInt(text);
}

std::vector<unsigned> parse_digit_list(const std::string& text) {
    const FDigits parsed = FDigits::parse(text);
    return {parsed.digits().begin(), parsed.digits().end()};
}

// n given either directly or as --digits.
FDigits resolve_digits(const std::string& n_text, const std::string& digits_text, const ParrySubstitution& phi) {
    if (n_text.empty() == digits_text.empty()) throw UsageError("give exactly one of <n> or --digits");
    if (!digits_text.empty()) {
        FDigits digits = FDigits::parse(digits_text).normalized();
        check_digits(digits, phi);
        if (!is_normal_frep(digits, phi)) {
            throw InvalidRepresentation(digits.to_string() + " is not the normal F-representation of its value");
        }
        return digits;
    }
    return to_normal_frep(parse_bigint(n_text), phi);
}

json digits_json(const FDigits& digits) {
    auto canon = digits.normalized();
    return json(std::vector<unsigned>(canon.digits().begin(), canon.digits().end()));
}

json rel_set_json(const RelativeParikhSet& set) {
    json out = json::array();
    for (const auto& v : set) out.push_back(std::vector<std::int64_t>(v.deltas().begin(), v.deltas().end()));
    return out;
}

std::string rel_set_text(const RelativeParikhSet& set) {
    std::string out = "{";
    bool first = true;
    for (const auto& v : set) {
        if (!first) out += ", ";
        out += v.to_string();
        first = false;
    }
    return out + "}";
}

std::string result_method(const AcResult& r) {
    return r.fallback ? "oracle-fallback" : to_string(r.method);
}

std::string pattern_text(const std::vector<unsigned>& block, const std::vector<unsigned>& tail) {
    auto list = [](const std::vector<unsigned>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s;
    };
    std::string out = "((" + list(block) + ")^i";
    if (!tail.empty()) out += ", " + list(tail);
    return out + ")";
}

struct Context {
    RunConfig config;
    std::ostream& out;
    std::ostream& err;

    Format format() const { return parse_format(config.format); }
    Method method() const {
        try {
            return parse_method(config.method);
        } catch (const Error& e) {
            throw UsageError(e.what());
        }
    }
    ParrySubstitution phi() const { return load_substitution(config); }
};

int cmd_ac(Context& ctx, const std::string& n_text, const std::string& digits_text) {
    const auto phi = ctx.phi();
    const auto digits = resolve_digits(n_text, digits_text, phi);
    const BigInt n = frep_value(digits, phi);
    const AcResult r = abelian_complexity(digits, phi, ctx.method(), ctx.config.cap);
    switch (ctx.format()) {
    case Format::text:
        ctx.out << "AC(" << n.str() << ") = " << r.value << "\n";
        if (r.fallback) {
            ctx.out << "note: co-decomposition step inapplicable, value taken from the oracle\n";
        } else if (r.method == Method::both) {
            ctx.out << "codec and oracle agree\n";
        }
        break;
    case Format::csv:
        ctx.out << "n,ac,method\n" << n.str() << "," << r.value << "," << result_method(r) << "\n";
        break;
    case Format::json: {
        json doc{{"n", n.str()}, {"digits", digits_json(digits)}, {"ac", r.value},
                 {"method", result_method(r)}, {"fallback", r.fallback}};
        doc["codec"] = r.codec_value ? json(*r.codec_value) : json(nullptr);
        doc["oracle"] = r.oracle_value ? json(*r.oracle_value) : json(nullptr);
        ctx.out << doc.dump() << "\n";
        break;
    }
    }
    return kOk;
}

int cmd_frep(Context& ctx, const std::string& n_text) {
    const auto phi = ctx.phi();
    const BigInt n = parse_bigint(n_text);
    const auto digits = to_normal_frep(n, phi);
    switch (ctx.format()) {
    case Format::text: ctx.out << digits.to_string() << "\n"; break;
    case Format::csv: ctx.out << "n,frep\n" << n.str() << ",\"" << digits.to_string() << "\"\n"; break;
    case Format::json: ctx.out << json{{"n", n.str()}, {"digits", digits_json(digits)}}.dump() << "\n"; break;
    }
    return kOk;
}

int cmd_prefix(Context& ctx, const std::string& n_text) {
    const auto phi = ctx.phi();
    const BigInt n = parse_bigint(n_text);
    const auto digits = to_normal_frep(n, phi);
    const Word prefix = prefix_from_frep(digits, phi, ctx.config.cap);
    const std::string text = render(prefix, phi.alphabet_size());
    switch (ctx.format()) {
    case Format::text: ctx.out << text << "\n"; break;
    case Format::csv: ctx.out << "n,prefix\n" << n.str() << "," << text << "\n"; break;
    case Format::json:
        ctx.out << json{{"n", n.str()}, {"digits", digits_json(digits)}, {"prefix", text}}.dump() << "\n";
        break;
    }
    return kOk;
}

int cmd_zset(Context& ctx, const std::string& n_text, const std::string& digits_text) {
    const auto phi = ctx.phi();
    const auto digits = resolve_digits(n_text, digits_text, phi);
    const ZSet z = z_set(digits, phi);
    const std::size_t A = phi.alphabet_size();
    switch (ctx.format()) {
    case Format::text: ctx.out << z.render(A); break;
    case Format::csv:
        ctx.out << "z,z_tilde\n";
        for (const auto& pair : z.pairs()) ctx.out << render(pair.z, A) << "," << render(pair.z_tilde, A) << "\n";
        break;
    case Format::json: {
        json pairs = json::array();
        for (const auto& pair : z.pairs()) pairs.push_back({{"z", render(pair.z, A)}, {"z_tilde", render(pair.z_tilde, A)}});
        ctx.out << json{{"n", frep_value(digits, phi).str()},
                        {"digits", digits_json(digits)},
                        {"pairs", pairs},
                        {"ac", rel_parikh_set(z, A).size()}}
                       .dump()
                << "\n";
        break;
    }
    }
    return kOk;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) throw UsageError("range must look like a..b");
    auto to_size = [](const std::string& s) {
        BigInt v = parse_bigint(s);
        if (v > std::numeric_limits<std::size_t>::max()) throw UsageError("range bound too large");
        return v.convert_to<std::size_t>();
    };
    std::size_t a = to_size(text.substr(0, dots));
    std::size_t b = to_size(text.substr(dots + 2));
    if (a < 1 || a > b) throw UsageError("range must satisfy 1 <= a <= b");
    return {a, b};
}

int cmd_scan(Context& ctx, const std::string& range_text) {
    const auto phi = ctx.phi();
    const auto [a, b] = parse_range(range_text);
    const Method method = ctx.method();

    std::vector<std::size_t> values(b - a + 1);
    std::vector<std::string> methods(values.size(), to_string(method));
    std::optional<Oracle> oracle;
    auto need_oracle = [&] {
        if (!oracle) oracle.emplace(phi, b, ctx.config.cap);
        return &*oracle;
    };
    std::vector<CodecOutcome> codec;
    if (method != Method::oracle) codec = codec_ac_range_parallel(phi, a, b);
    std::vector<std::size_t> brute;
    bool any_fallback = std::any_of(codec.begin(), codec.end(), [](const CodecOutcome& c) { return !c.ac; });
    if (method != Method::codec || any_fallback) brute = oracle_ac_range_parallel(*need_oracle(), a, b);

    int status = kOk;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (method == Method::oracle) {
            values[i] = brute[i];
            continue;
        }
        if (!codec[i].ac) {
            values[i] = brute[i];
            methods[i] = "oracle-fallback";
            continue;
        }
        values[i] = *codec[i].ac;
        if (method == Method::both && *codec[i].ac != brute[i]) {
            ctx.err << "mismatch at n = " << a + i << ": codec " << *codec[i].ac << ", oracle " << brute[i] << "\n";
            status = kMismatch;
        }
    }

    switch (ctx.format()) {
    case Format::text:
        for (std::size_t i = 0; i < values.size(); ++i) ctx.out << a + i << "," << values[i] << "\n";
        break;
    case Format::csv:
        ctx.out << "n,ac,method\n";
        for (std::size_t i = 0; i < values.size(); ++i) ctx.out << a + i << "," << values[i] << "," << methods[i] << "\n";
        break;
    case Format::json: {
        json rows = json::array();
        for (std::size_t i = 0; i < values.size(); ++i) rows.push_back({{"n", a + i}, {"ac", values[i]}, {"method", methods[i]}});
        ctx.out << rows.dump() << "\n";
        break;
    }
    }
    return status;
}

json report_json(const StabilizationReport& report) {
    json trace = json::array();
    for (const auto& s : report.trace) {
        trace.push_back({{"i", s.i}, {"n", s.n.str()}, {"ac", s.ac ? json(*s.ac) : json(nullptr)}});
    }
    return json{{"pattern", {{"block", report.block}, {"tail", report.tail}}},
                {"stabilized_at", report.stabilized_at ? json(*report.stabilized_at) : json(nullptr)},
                {"stable_ac", report.stable_ac ? json(*report.stable_ac) : json(nullptr)},
                {"stable_rel_set", rel_set_json(report.stable_rel_set)},
                {"oracle_only", report.oracle_only},
                {"infinite_attainment", report.infinite_attainment()},
                {"trace", trace}};
}

int cmd_stabilize(Context& ctx, const std::string& block_text, const std::string& tail_text, std::size_t max_i) {
    const auto phi = ctx.phi();
    const auto block = parse_digit_list(block_text);
    const auto tail = parse_digit_list(tail_text);
    const auto report = detect_stabilization(block, tail, max_i, phi, ctx.config.cap);
    switch (ctx.format()) {
    case Format::json: ctx.out << report_json(report).dump() << "\n"; break;
    case Format::csv:
        ctx.out << "i,n,ac\n";
        for (const auto& s : report.trace) ctx.out << s.i << "," << s.n.str() << "," << (s.ac ? std::to_string(*s.ac) : "") << "\n";
        break;
    case Format::text:
        ctx.out << "pattern: " << pattern_text(report.block, report.tail) << "\n";
        if (report.stabilized_at) {
            ctx.out << "stabilized at i = " << *report.stabilized_at << ", stable AC = " << *report.stable_ac << "\n";
            ctx.out << "stable relative Parikh set: " << rel_set_text(report.stable_rel_set) << "\n";
            ctx.out << "value attained infinitely often: " << (report.infinite_attainment() ? "yes" : "no") << "\n";
        } else if (report.oracle_only) {
            ctx.out << "co-decomposition step inapplicable; oracle values only, no conclusion about i -> infinity\n";
        } else {
            ctx.out << "not stabilized within i <= " << max_i << "\n";
        }
        for (const auto& s : report.trace) {
            ctx.out << "  i = " << s.i << ", n = " << s.n.str() << ", AC = " << (s.ac ? std::to_string(*s.ac) : "?") << "\n";
        }
        break;
    }
    return kOk;
}

int cmd_verify(Context& ctx, std::size_t min_n, std::size_t max_n) {
    const auto phi = ctx.phi();
    if (min_n < 1 || min_n > max_n) throw UsageError("need 1 <= --min-n <= --max-n");
    const auto rows = verify_range(phi, min_n, max_n, ctx.config.cap);
    std::size_t fallbacks = 0, mismatches = 0;
    for (const auto& r : rows) {
        fallbacks += r.fallback();
        mismatches += !r.agrees();
    }
    auto status = [](const VerifyRow& r) { return r.fallback() ? "fallback" : (r.agrees() ? "ok" : "mismatch"); };
    switch (ctx.format()) {
    case Format::text:
        for (const auto& r : rows) {
            if (!r.agrees()) ctx.out << "mismatch at n = " << r.n << ": codec " << *r.codec << ", oracle " << r.oracle << "\n";
        }
        ctx.out << "verified n = " << min_n << ".." << max_n << ": " << rows.size() - fallbacks - mismatches
                << " agree, " << fallbacks << " fallbacks, " << mismatches << " mismatches\n";
        break;
    case Format::csv:
        ctx.out << "n,codec,oracle,status\n";
        for (const auto& r : rows) {
            ctx.out << r.n << "," << (r.codec ? std::to_string(*r.codec) : "") << "," << r.oracle << "," << status(r) << "\n";
        }
        break;
    case Format::json: {
        json list = json::array();
        for (const auto& r : rows) {
            list.push_back({{"n", r.n}, {"codec", r.codec ? json(*r.codec) : json(nullptr)}, {"oracle", r.oracle}, {"status", status(r)}});
        }
        ctx.out << json{{"rows", list}, {"fallbacks", fallbacks}, {"mismatches", mismatches}}.dump() << "\n";
        break;
    }
    }
    return mismatches ? kMismatch : kOk;
}

int cmd_balance(Context& ctx, std::size_t max_n) {
    const auto phi = ctx.phi();
    if (max_n < 1) throw UsageError("--max-n must be positive");
    const Oracle oracle(phi, max_n, ctx.config.cap);
    const auto profile = balance_profile_parallel(oracle, max_n);
    switch (ctx.format()) {
    case Format::text: {
        ctx.out << "max imbalance per letter for n <= " << max_n << ": (";
        for (std::size_t l = 0; l < profile.max_imbalance.size(); ++l) ctx.out << (l ? "," : "") << profile.max_imbalance[l];
        ctx.out << "), c = " << profile.c() << "\n";
        break;
    }
    case Format::csv:
        ctx.out << "letter,max_imbalance\n";
        for (std::size_t l = 0; l < profile.max_imbalance.size(); ++l) ctx.out << l << "," << profile.max_imbalance[l] << "\n";
        break;
    case Format::json:
        ctx.out << json{{"n_max", max_n}, {"max_imbalance", profile.max_imbalance}, {"c", profile.c()}}.dump() << "\n";
        break;
    }
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Abelian complexity of Parry words by abelian co-decomposition", "abelian"};
    app.require_subcommand(1);
    app.fallthrough();

    Context ctx{RunConfig{}, out, err};
    auto& cfg = ctx.config;
    app.add_option("--sub", cfg.sub, "substitution: 'simple m=3 alpha=1,1,1', 'nonsimple m=1 p=2 alpha=2,0,1' or '0->01;1->02;2->0'");
    app.add_option("--sub-file", cfg.sub_file, "file holding a substitution spec or a JSON document");
    app.add_option("--format", cfg.format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
    app.add_option("--cap", cfg.cap, "maximum number of letters to materialize")->check(CLI::Range(std::size_t{10'000}, std::numeric_limits<std::size_t>::max()));
    app.add_option("--method", cfg.method, "codec, oracle or both")->check(CLI::IsMember({"codec", "oracle", "both"}));

    std::string n_text, digits_text, range_text, block_text, tail_text;
    std::size_t max_i = 20, min_n = 1, max_n = 0;

    auto* ac = app.add_subcommand("ac", "abelian complexity AC(n)");
    ac->add_option("n", n_text, "n");
    ac->add_option("--digits", digits_text, "n given by its F-representation, most significant digit first");

    auto* frep = app.add_subcommand("frep", "normal F-representation of n");
    frep->add_option("n", n_text, "n")->required();

    auto* prefix = app.add_subcommand("prefix", "prefix u_[n] rebuilt from the F-representation");
    prefix->add_option("n", n_text, "n")->required();

    auto* zset = app.add_subcommand("zset", "Z-set of n");
    zset->add_option("n", n_text, "n");
    zset->add_option("--digits", digits_text, "n given by its F-representation");

    auto* scan = app.add_subcommand("scan", "AC(n) for every n in a..b");
    scan->add_option("range", range_text, "a..b")->required();

    auto* stabilize = app.add_subcommand("stabilize", "detect a Z-set fixed point along (block^i, tail)");
    stabilize->add_option("--block", block_text, "repeated digits, e.g. 1,0,0,0")->required();
    stabilize->add_option("--tail", tail_text, "trailing digits, e.g. 1")->default_val("");
    stabilize->add_option("--max-i", max_i, "largest i examined")->default_val(20);

    auto* verify = app.add_subcommand("verify", "compare co-decomposition against brute force");
    verify->add_option("--max-n", max_n, "largest n")->required();
    verify->add_option("--min-n", min_n, "smallest n")->default_val(1);

    auto* balance = app.add_subcommand("balance", "per-letter imbalance profile");
    balance->add_option("--max-n", max_n, "largest n")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (*ac) return cmd_ac(ctx, n_text, digits_text);
        if (*frep) return cmd_frep(ctx, n_text);
        if (*prefix) return cmd_prefix(ctx, n_text);
        if (*zset) return cmd_zset(ctx, n_text, digits_text);
        if (*scan) return cmd_scan(ctx, range_text);
        if (*stabilize) return cmd_stabilize(ctx, block_text, tail_text, max_i);
        if (*verify) return cmd_verify(ctx, min_n, max_n);
        if (*balance) return cmd_balance(ctx, max_n);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const InvalidSubstitution& e) {
        err << "invalid substitution: " << e.what() << "\n";
        return kInvalidSubstitution;
    } catch (const ResourceError& e) {
        err << "resource cap exceeded: " << e.what() << "\n";
        return kResourceCap;
    } catch (const VerificationMismatch& e) {
        err << "verification mismatch: " << e.what() << "\n";
        return kMismatch;
    } catch (const InvalidRepresentation& e) {
        err << "invalid digits: " << e.what() << "\n";
        return kInvalidDigits;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kFailure;
    }
    err << "usage error: no command given\n";
    return kUsage;
}

} // namespace abelian::cli
