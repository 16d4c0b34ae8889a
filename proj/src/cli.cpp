#include "dynwild/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <istream>
#include <iterator>
#include <memory>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "dynwild/hardness.hpp"
#include "dynwild/matcher_general.hpp"
#include "dynwild/matcher_sparse.hpp"
#include "dynwild/matcher_two.hpp"
#include "dynwild/range_pair.hpp"

namespace dynwild::cli {

Mode parseMode(const std::string& name) {
    if (name == "general") return Mode::General;
    if (name == "two") return Mode::Two;
    if (name == "sparse") return Mode::Sparse;
    if (name == "rangepair") return Mode::RangePair;
    if (name == "ov") return Mode::OV;
    throw std::invalid_argument("unknown mode '" + name + "'");
}

std::string modeName(Mode mode) {
    switch (mode) {
        case Mode::General: return "general";
        case Mode::Two: return "two";
        case Mode::Sparse: return "sparse";
        case Mode::RangePair: return "rangepair";
        case Mode::OV: return "ov";
    }
    return "?";
}

namespace {

// Bad command; the script loop attaches the line number.
struct CommandError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Tokens = std::vector<std::string>;

void expectArity(const Tokens& t, std::size_t n) {
    if (t.size() != n) {
        throw CommandError(t[0] + " expects " + std::to_string(n - 1) + " argument(s), got " +
                           std::to_string(t.size() - 1));
    }
}

std::size_t parseNumber(const std::string& tok, const char* what) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw CommandError(std::string("bad ") + what + " '" + tok + "'");
    }
    return value;
}

Symbol parseSymbol(const std::string& tok) {
    if (tok.size() != 1) throw CommandError("symbol must be a single byte, got '" + tok + "'");
    if (tok[0] == '#') throw CommandError("'#' is reserved");
    return static_cast<unsigned char>(tok[0]);
}

char parseTarget(const std::string& tok) {
    if (tok != "T" && tok != "P") throw CommandError("target must be T or P, got '" + tok + "'");
    return tok[0];
}

SymbolString loadSymbols(const std::string& s, const char* what) {
    if (s.find('#') != std::string::npos) throw std::invalid_argument(std::string(what) + " contains reserved '#'");
    return toSymbols(s);
}

std::size_t ceilPow(std::size_t n, double e) {
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(std::pow(static_cast<double>(n), e) - 1e-9)));
}

class Session {
public:
    virtual ~Session() = default;
    virtual void execute(const Tokens& t, std::ostream& out) = 0;
    virtual nlohmann::json counters() const = 0;
    virtual std::size_t textSize() const = 0;
    virtual std::size_t patternSize() const = 0;
};

void printVerdict(const MatchVerdict& v, std::ostream& out) { out << (v.matched ? "MATCH" : "NOMATCH") << std::endl; }

class GeneralSession final : public Session {
public:
    GeneralSession(const RunConfig& cfg, const std::string& text, const std::string& pattern)
        : matcher_(loadSymbols(text, "text"), loadSymbols(pattern, "pattern"),
                   GeneralConfig{cfg.k, cfg.tau, parseOracleKind(cfg.oracle), cfg.seed}) {}

    void execute(const Tokens& t, std::ostream& out) override {
        if (t[0] == "SUB") {
            expectArity(t, 4);
            const char target = parseTarget(t[1]);
            const Position i = parseNumber(t[2], "position");
            const Symbol c = parseSymbol(t[3]);
            target == 'T' ? matcher_.substituteText(i, c) : matcher_.substitutePattern(i, c);
        } else if (t[0] == "QUERY") {
            expectArity(t, 1);
            printVerdict(matcher_.query(), out);
        } else if (t[0] == "DUMP") {
            expectArity(t, 1);
            const TextIndex& idx = matcher_.textIndex();
            out << "T=" << toDisplay(idx.text()) << " T'=" << toDisplay(idx.modifiedText())
                << " P=" << toDisplay(matcher_.pattern().symbols()) << " tau=" << idx.tau() << std::endl;
        } else {
            throw CommandError("verb " + t[0] + " is not available in mode general");
        }
    }

    nlohmann::json counters() const override {
        const GeneralCounters& c = matcher_.counters();
        return {{"textUpdates", c.textUpdates},     {"patternUpdates", c.patternUpdates},
                {"modifiedTextChanges", c.modifiedTextChanges},
                {"queries", c.queries},             {"case1Queries", c.case1Queries},
                {"case2Queries", c.case2Queries},   {"case1Candidates", c.case1Candidates},
                {"isMatchCalls", c.isMatchCalls},   {"completions", c.completions},
                {"oracleUpdates", c.oracleUpdates}, {"tau", matcher_.textIndex().tau()}};
    }
    std::size_t textSize() const override { return matcher_.textIndex().size(); }
    std::size_t patternSize() const override { return matcher_.pattern().size(); }

    GeneralMatcher matcher_;
};

TwoParams twoParams(const RunConfig& cfg) {
    return TwoParams{cfg.tau, cfg.blockSize, cfg.rebuildThreshold, parseConvolutionBackend(cfg.convolution), cfg.seed};
}

nlohmann::json rangePairCounters(const RangePairStructure& rp) {
    const RangePairCounters& c = rp.counters();
    return {{"updates", c.updates},
            {"nearTouches", c.nearTouches},
            {"maxNearTouchesPerUpdate", c.maxNearTouchesPerUpdate},
            {"rebuilds", c.rebuilds},
            {"convolutions", c.convolutions},
            {"convolutionWork", c.convolutionWork},
            {"queries", c.queries},
            {"corrections", c.corrections},
            {"blockSize", rp.blockSize()},
            {"rebuildThreshold", rp.rebuildThreshold()},
            {"numBlocks", rp.numBlocks()}};
}

class TwoSession final : public Session {
public:
    TwoSession(const RunConfig& cfg, const std::string& text, const std::string& pattern)
        : matcher_(loadSymbols(text, "text"), loadSymbols(pattern, "pattern"), twoParams(cfg)) {}

    void execute(const Tokens& t, std::ostream& out) override {
        if (t[0] == "SUB") {
            expectArity(t, 4);
            const char target = parseTarget(t[1]);
            const Position i = parseNumber(t[2], "position");
            const Symbol c = parseSymbol(t[3]);
            target == 'T' ? matcher_.substituteText(i, c) : matcher_.substitutePattern(i, c);
        } else if (t[0] == "INS") {
            expectArity(t, 4);
            if (parseTarget(t[1]) != 'P') throw CommandError("INS applies to the pattern only");
            matcher_.insertPattern(parseNumber(t[2], "position"), parseSymbol(t[3]));
        } else if (t[0] == "DEL") {
            expectArity(t, 3);
            if (parseTarget(t[1]) != 'P') throw CommandError("DEL applies to the pattern only");
            matcher_.deletePattern(parseNumber(t[2], "position"));
        } else if (t[0] == "QUERY") {
            expectArity(t, 1);
            printVerdict(matcher_.query(), out);
        } else if (t[0] == "COUNT") {
            expectArity(t, 1);
            out << matcher_.query().count.value_or(0) << std::endl;
        } else if (t[0] == "DUMP") {
            expectArity(t, 1);
            out << "T=" << toDisplay(matcher_.textIndex().text()) << " P=" << toDisplay(matcher_.patternSymbols())
                << " tau=" << matcher_.tau() << " coded=" << matcher_.symbolMap().activeCodes() << std::endl;
        } else {
            throw CommandError("verb " + t[0] + " is not available in mode two");
        }
    }

    nlohmann::json counters() const override {
        const TwoCounters& c = matcher_.counters();
        return {{"textUpdates", c.textUpdates},
                {"patternUpdates", c.patternUpdates},
                {"promotions", c.promotions},
                {"demotions", c.demotions},
                {"retaggedPositions", c.retaggedPositions},
                {"queries", c.queries},
                {"rareScans", c.rareScans},
                {"rangePairQueries", c.rangePairQueries},
                {"tau", matcher_.tau()},
                {"rangePair", rangePairCounters(matcher_.rangePair())}};
    }
    std::size_t textSize() const override { return matcher_.textSize(); }
    std::size_t patternSize() const override { return matcher_.patternSize(); }

    TwoMatcher matcher_;
};

class SparseSession final : public Session {
public:
    SparseSession(const RunConfig& cfg, const std::string& text, const std::string& pattern)
        : matcher_(loadSymbols(text, "text"), loadSymbols(pattern, "pattern"), cfg.seed) {}

    void execute(const Tokens& t, std::ostream& out) override {
        if (t[0] == "SUB") {
            expectArity(t, 4);
            const char target = parseTarget(t[1]);
            const Position i = parseNumber(t[2], "position");
            const Symbol c = parseSymbol(t[3]);
            target == 'T' ? matcher_.substituteText(i, c) : matcher_.substitutePattern(i, c);
        } else if (t[0] == "QUERY") {
            expectArity(t, 1);
            printVerdict(matcher_.query(), out);
        } else if (t[0] == "DUMP") {
            expectArity(t, 1);
            out << "T=" << toDisplay(matcher_.text()) << " P=" << toDisplay(matcher_.pattern()) << " recomputed=";
            const auto& windows = matcher_.lastRecomputed();
            for (std::size_t i = 0; i < windows.size(); ++i) out << (i ? "," : "") << windows[i];
            out << std::endl;
        } else {
            throw CommandError("verb " + t[0] + " is not available in mode sparse");
        }
    }

    nlohmann::json counters() const override {
        const SparseCounters& c = matcher_.counters();
        return {{"textUpdates", c.textUpdates},
                {"patternUpdates", c.patternUpdates},
                {"windowRecomputations", c.windowRecomputations},
                {"queries", c.queries},
                {"lastRecomputed", matcher_.lastRecomputed()}};
    }
    std::size_t textSize() const override { return matcher_.textSize(); }
    std::size_t patternSize() const override { return matcher_.patternSize(); }

    SparseMatcher matcher_;
};

RangePairStructure makeRangePair(const RunConfig& cfg, const std::string& text) {
    const SymbolString symbols = loadSymbols(text, "text");
    const std::size_t n = symbols.size();
    const std::size_t block = cfg.blockSize.value_or(ceilPow(n, 0.8));
    const std::size_t delta = cfg.rebuildThreshold.value_or(std::min(block, ceilPow(n, 0.6)));
    return RangePairStructure(std::vector<RangeCode>(symbols.begin(), symbols.end()), kByteAlphabet, block, delta,
                              parseConvolutionBackend(cfg.convolution));
}

class RangePairSession final : public Session {
public:
    RangePairSession(const RunConfig& cfg, const std::string& text) : rp_(makeRangePair(cfg, text)) {}

    void execute(const Tokens& t, std::ostream& out) override {
        if (t[0] == "SUB") {
            expectArity(t, 4);
            if (parseTarget(t[1]) != 'T') throw CommandError("mode rangepair has no pattern");
            rp_.update(parseNumber(t[2], "position"), parseSymbol(t[3]));
        } else if (t[0] == "PAIRQUERY") {
            expectArity(t, 6);
            out << rp_.query(parseNumber(t[1], "left bound"), parseNumber(t[2], "right bound"), parseSymbol(t[3]),
                             parseSymbol(t[4]), parseNumber(t[5], "distance"))
                << std::endl;
        } else if (t[0] == "DUMP") {
            expectArity(t, 1);
            out << "X=";
            for (RangeCode c : rp_.values()) out << static_cast<char>(c);
            out << " B=" << rp_.blockSize() << " delta=" << rp_.rebuildThreshold() << std::endl;
        } else {
            throw CommandError("verb " + t[0] + " is not available in mode rangepair");
        }
    }

    nlohmann::json counters() const override { return rangePairCounters(rp_); }
    std::size_t textSize() const override { return rp_.size(); }
    std::size_t patternSize() const override { return 0; }

    RangePairStructure rp_;
};

std::unique_ptr<Session> makeSession(const RunConfig& cfg, const std::string& text, const std::string& pattern) {
    switch (cfg.mode) {
        case Mode::General: return std::make_unique<GeneralSession>(cfg, text, pattern);
        case Mode::Two: return std::make_unique<TwoSession>(cfg, text, pattern);
        case Mode::Sparse: return std::make_unique<SparseSession>(cfg, text, pattern);
        case Mode::RangePair: return std::make_unique<RangePairSession>(cfg, text);
        case Mode::OV: break;
    }
    throw std::invalid_argument("mode ov takes vectors, not a script");
}

}  // namespace

RunSummary runScript(const RunConfig& config, const std::string& text, const std::string& pattern,
                     std::istream& script, std::ostream& out) {
    auto session = makeSession(config, text, pattern);
    std::string line;
    std::size_t lineNo = 0;
    while (std::getline(script, line)) {
        ++lineNo;
        std::istringstream words(line);
        Tokens tokens{std::istream_iterator<std::string>(words), std::istream_iterator<std::string>()};
        if (tokens.empty()) continue;
        try {
            session->execute(tokens, out);
        } catch (const std::exception& e) {
            throw ScriptError(lineNo, e.what());
        }
    }
    return RunSummary{session->textSize(), session->patternSize(), session->counters()};
}

RunSummary runOV(const RunConfig& config, const std::vector<std::string>& rows, std::ostream& out) {
    const OVInstance inst = parseOVInstance(rows);
    OVSolveStats stats;
    const bool answer = ovSolveViaMatcher(inst, &stats, config.seed);
    out << (answer ? "TRUE" : "FALSE") << std::endl;
    out << "queries=" << stats.queries << " substitutions=" << stats.substitutions
        << " selfOnlyMatches=" << stats.selfOnlyMatches << std::endl;
    RunSummary summary;
    summary.n = inst.count();
    summary.m = inst.dimension();
    summary.counters = {{"queries", stats.queries},
                        {"substitutions", stats.substitutions},
                        {"selfOnlyMatches", stats.selfOnlyMatches},
                        {"answer", answer}};
    return summary;
}

nlohmann::json makeReport(Mode mode, const RunSummary& summary, std::size_t k, double wallMillis) {
    return {{"mode", modeName(mode)},
            {"n", summary.n},
            {"m", summary.m},
            {"k", k},
            {"counters", summary.counters},
            {"wallMillis", wallMillis}};
}

namespace {

using Clock = std::chrono::steady_clock;

double millisSince(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Draws the benchmark workload and emits it as a script for the session.
class BenchGenerator {
public:
    BenchGenerator(const RunConfig& cfg, const BenchStream& stream) : cfg_(cfg), stream_(stream), rng_(cfg.seed) {}

    char letter() { return static_cast<char>('a' + pick(std::max<std::size_t>(stream_.sigma, 1))); }
    std::size_t pick(std::size_t bound) { return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng_); }

    std::string text() {
        std::string s(stream_.n, 'a');
        for (char& ch : s) ch = letter();
        return s;
    }

    // Pattern shape per mode: two anchors in mode two, up to k wildcards elsewhere.
    std::string pattern() {
        const std::size_t m = std::clamp<std::size_t>(stream_.m, 1, stream_.n);
        std::string p(m, '?');
        if (cfg_.mode == Mode::Two) {
            p[0] = letter();
            if (m > 1) p[m - 1] = letter();
            return p;
        }
        const std::size_t wild = std::min(cfg_.k, m - 1);
        for (char& ch : p) ch = letter();
        for (std::size_t w = 0; w < wild; ++w) p[pick(m)] = '?';
        return p;
    }

    std::string script(const std::string& pattern) {
        std::ostringstream out;
        std::string live = pattern;
        for (std::size_t u = 0; u < stream_.updates; ++u) {
            if (cfg_.mode == Mode::RangePair) {
                out << "SUB T " << 1 + pick(stream_.n) << ' ' << letter() << '\n';
            } else if (pick(2) == 0 || cfg_.mode == Mode::Two) {
                out << "SUB T " << 1 + pick(stream_.n) << ' ' << letter() << '\n';
            } else {
                std::vector<std::size_t> solid;
                for (std::size_t j = 0; j < live.size(); ++j) {
                    if (live[j] != '?') solid.push_back(j);
                }
                if (solid.empty()) continue;
                const std::size_t j = solid[pick(solid.size())];
                live[j] = letter();
                out << "SUB P " << j + 1 << ' ' << live[j] << '\n';
            }
            if (stream_.queryEvery > 0 && (u + 1) % stream_.queryEvery == 0) {
                if (cfg_.mode == Mode::RangePair) {
                    const std::size_t l = 1 + pick(stream_.n);
                    const std::size_t r = l + pick(stream_.n - l + 1);
                    out << "PAIRQUERY " << l << ' ' << r << ' ' << letter() << ' ' << letter() << ' '
                        << pick(stream_.n) << '\n';
                } else {
                    out << (cfg_.mode == Mode::Two ? "COUNT" : "QUERY") << '\n';
                }
            }
        }
        return out.str();
    }

private:
    const RunConfig& cfg_;
    const BenchStream& stream_;
    std::mt19937_64 rng_;
};

}  // namespace

nlohmann::json bench(const RunConfig& config, const BenchStream& stream) {
    if (config.mode == Mode::OV) throw std::invalid_argument("bench does not support mode ov");
    if (stream.n == 0) throw std::invalid_argument("bench needs n >= 1");
    BenchGenerator gen(config, stream);
    const std::string text = gen.text();
    const std::string pattern = gen.pattern();
    std::istringstream script(gen.script(pattern));

    std::ostringstream verdicts;
    const auto start = Clock::now();
    RunSummary summary = runScript(config, text, pattern, script, verdicts);
    const double wall = millisSince(start);

    // MATCH verdicts and nonzero counts.
    std::size_t positive = 0;
    std::size_t outputs = 0;
    std::istringstream lines(verdicts.str());
    for (std::string line; std::getline(lines, line); ++outputs) {
        if (line == "MATCH" || (line != "NOMATCH" && line != "0")) ++positive;
    }
    summary.counters["outputs"] = outputs;
    summary.counters["positiveOutputs"] = positive;
    nlohmann::json report = makeReport(config.mode, summary, config.k, wall);
    report["stream"] = {{"n", stream.n},         {"m", stream.m},          {"sigma", stream.sigma},
                        {"updates", stream.updates}, {"queryEvery", stream.queryEvery}, {"seed", config.seed}};
    return report;
}

namespace {

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string stripNewline(std::string s) {
    if (!s.empty() && s.back() == '\n') s.pop_back();
    if (!s.empty() && s.back() == '\r') s.pop_back();
    return s;
}

std::vector<std::string> splitRows(const std::string& s) {
    std::vector<std::string> rows;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);) {
        line = stripNewline(line);
        if (!line.empty()) rows.push_back(line);
    }
    return rows;
}

}  // namespace

int main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Dynamic pattern matching with wildcards"};
    app.fallthrough();
    app.set_help_all_flag("--help-all");

    std::string modeText = "general";
    RunConfig cfg;
    bool report = false;
    std::string textFile;
    std::string textLiteral;
    std::string pattern;
    std::string scriptFile;
    app.add_option("--mode", modeText, "general | two | sparse | rangepair | ov")->capture_default_str();
    app.add_option("--tau", cfg.tau, "frequency threshold");
    app.add_option("--block-size", cfg.blockSize, "range-pair block size B");
    app.add_option("--rebuild-threshold", cfg.rebuildThreshold, "range-pair rebuild threshold");
    app.add_option("--k", cfg.k, "wildcard budget (mode general)")->capture_default_str();
    app.add_option("--seed", cfg.seed, "hash / generator seed")->capture_default_str();
    app.add_option("--oracle", cfg.oracle, "substring oracle: multiset | naive")->capture_default_str();
    app.add_option("--convolution", cfg.convolution, "schoolbook | ntt")->capture_default_str();
    app.add_flag("--report", report, "print a JSON report after the last command");
    app.add_option("--text", textFile, "text file (raw bytes; mode ov: one 0/1 vector per line)");
    app.add_option("--text-literal", textLiteral, "text given inline");
    app.add_option("--pattern", pattern, "pattern string, '?' is the wildcard");
    app.add_option("--script", scriptFile, "command script (default: stdin)");

    BenchStream stream;
    CLI::App* benchCmd = app.add_subcommand("bench", "seeded random update/query stream, JSON report");
    benchCmd->add_option("--n", stream.n, "text length")->capture_default_str();
    benchCmd->add_option("--m", stream.m, "pattern length")->capture_default_str();
    benchCmd->add_option("--sigma", stream.sigma, "alphabet size")->capture_default_str();
    benchCmd->add_option("--updates", stream.updates, "number of updates")->capture_default_str();
    benchCmd->add_option("--query-every", stream.queryEvery, "query after every this many updates")
        ->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        cfg.mode = parseMode(modeText);
        if (*benchCmd) {
            out << bench(cfg, stream).dump(2) << std::endl;
            return 0;
        }
        std::string text = textLiteral;
        if (!textFile.empty()) text = stripNewline(readFile(textFile));

        const auto start = Clock::now();
        RunSummary summary;
        if (cfg.mode == Mode::OV) {
            if (textFile.empty() && textLiteral.empty()) {
                std::ostringstream buf;
                buf << in.rdbuf();
                text = buf.str();
            }
            summary = runOV(cfg, splitRows(text), out);
        } else if (scriptFile.empty()) {
            summary = runScript(cfg, text, pattern, in, out);
        } else {
            std::ifstream script(scriptFile);
            if (!script) throw std::runtime_error("cannot open '" + scriptFile + "'");
            summary = runScript(cfg, text, pattern, script, out);
        }
        if (report) out << makeReport(cfg.mode, summary, cfg.k, millisSince(start)).dump(2) << std::endl;
        return 0;
    } catch (const ScriptError& e) {
        err << "dynwild: " << e.what() << std::endl;
        return 1;
    } catch (const std::exception& e) {
        err << "dynwild: " << e.what() << std::endl;
        return 2;
    }
}

}  // namespace dynwild::cli
