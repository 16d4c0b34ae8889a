#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace dynwild::cli {

enum class Mode { General, Two, Sparse, RangePair, OV };

Mode parseMode(const std::string& name);
std::string modeName(Mode mode);

struct RunConfig {
    Mode mode = Mode::General;
    std::optional<std::size_t> tau;
    std::optional<std::size_t> blockSize;
    std::optional<std::size_t> rebuildThreshold;
    std::size_t k = 3;
    std::uint64_t seed = 0x5eed;
    std::string oracle = "multiset";
    std::string convolution = "schoolbook";
};

// Malformed command or mode violation at a 1-based script line.
class ScriptError : public std::runtime_error {
public:
    ScriptError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

struct RunSummary {
    std::size_t n = 0;
    std::size_t m = 0;
    nlohmann::json counters = nlohmann::json::object();
};

// Replays a command script, one output line per QUERY / COUNT / PAIRQUERY.
RunSummary runScript(const RunConfig& config, const std::string& text, const std::string& pattern,
                     std::istream& script, std::ostream& out);

// One 0/1 vector per row; prints TRUE or FALSE.
RunSummary runOV(const RunConfig& config, const std::vector<std::string>& rows, std::ostream& out);

struct BenchStream {
    std::size_t n = 1000;
    std::size_t m = 8;
    std::size_t sigma = 4;
    std::size_t updates = 1000;
    std::size_t queryEvery = 1;
};

// Seeded random stream; the counters section depends only on (config, stream).
nlohmann::json bench(const RunConfig& config, const BenchStream& stream);

nlohmann::json makeReport(Mode mode, const RunSummary& summary, std::size_t k, double wallMillis);

// Full command-line entry point; returns the process exit status.
int main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace dynwild::cli
