#include "dynwild/hardness.hpp"

#include <stdexcept>

#include "dynwild/matcher_general.hpp"

namespace dynwild {

void OVInstance::validate() const {
    const std::size_t d = dimension();
    if (!vectors.empty() && d == 0) throw std::invalid_argument("OV vectors must have dimension >= 1");
    for (const auto& v : vectors) {
        if (v.size() != d) throw std::invalid_argument("OV vectors must share one dimension");
    }
}

OVInstance parseOVInstance(const std::vector<std::string>& rows) {
    OVInstance inst;
    for (const std::string& row : rows) {
        std::vector<bool> v;
        for (char ch : row) {
            if (ch != '0' && ch != '1') throw std::invalid_argument("OV vector rows must be 0/1 strings");
            v.push_back(ch == '1');
        }
        inst.vectors.push_back(std::move(v));
    }
    inst.validate();
    return inst;
}

OVReduction ovReduce(const OVInstance& inst) {
    inst.validate();
    OVReduction out;
    out.text.push_back(kDelimiter);
    for (const auto& v : inst.vectors) {
        SymbolString tmpl{kDelimiter};
        for (bool bit : v) {
            out.text.push_back(bit ? '1' : '0');
            tmpl.push_back(bit ? '0' : kWildcard);
        }
        out.text.push_back(kDelimiter);
        tmpl.push_back(kDelimiter);
        out.templates.push_back(std::move(tmpl));
    }
    return out;
}

bool ovBrute(const OVInstance& inst) {
    const auto& vs = inst.vectors;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            bool orthogonal = true;
            for (std::size_t h = 0; h < vs[i].size() && orthogonal; ++h) orthogonal = !(vs[i][h] && vs[j][h]);
            if (orthogonal) return true;
        }
    }
    return false;
}

namespace {

class GeneralBackend final : public MatcherBackend {
public:
    GeneralBackend(const SymbolString& text, const SymbolString& pattern, std::size_t budget, std::uint64_t seed)
        : matcher_(text, pattern, GeneralConfig{.wildcardBudget = budget, .seed = seed}) {}

    void substitutePattern(Position i, Symbol c) override { matcher_.substitutePattern(i, c); }
    bool query() override { return matcher_.query().matched; }

private:
    GeneralMatcher matcher_;
};

// Vector slot j (0-based) occupies text[j*(d+1) .. j*(d+1)+d+1].
bool slotMatches(const SymbolString& text, const SymbolString& tmpl, std::size_t slot) {
    const std::size_t offset = slot * (tmpl.size() - 1);
    for (std::size_t h = 0; h < tmpl.size(); ++h) {
        if (!isWildcard(tmpl[h]) && tmpl[h] != text[offset + h]) return false;
    }
    return true;
}

}  // namespace

std::unique_ptr<MatcherBackend> makeGeneralBackend(const SymbolString& text, const SymbolString& pattern,
                                                   std::size_t budget, std::uint64_t seed) {
    return std::make_unique<GeneralBackend>(text, pattern, budget, seed);
}

bool ovSolveViaMatcher(const OVInstance& inst, const BackendFactory& factory, OVSolveStats* stats) {
    OVSolveStats local;
    OVSolveStats& st = stats ? *stats : local;
    st = {};
    if (inst.count() == 0) return false;

    const OVReduction red = ovReduce(inst);
    SymbolString live = red.templates.front();
    auto backend = factory(red.text, live);
    bool found = false;
    for (std::size_t i = 0; i < red.templates.size(); ++i) {
        const SymbolString& tmpl = red.templates[i];
        for (std::size_t h = 0; h < tmpl.size(); ++h) {
            if (live[h] == tmpl[h]) continue;
            backend->substitutePattern(h + 1, tmpl[h]);
            live[h] = tmpl[h];
            ++st.substitutions;
        }
        ++st.queries;
        if (!backend->query()) continue;
        bool other = false;
        for (std::size_t j = 0; j < inst.count() && !other; ++j) other = j != i && slotMatches(red.text, tmpl, j);
        if (other) {
            found = true;
        } else {
            ++st.selfOnlyMatches;
        }
    }
    return found;
}

bool ovSolveViaMatcher(const OVInstance& inst, OVSolveStats* stats, std::uint64_t seed) {
    const std::size_t budget = inst.dimension();
    return ovSolveViaMatcher(
        inst,
        [&](const SymbolString& text, const SymbolString& pattern) {
            return makeGeneralBackend(text, pattern, budget, seed);
        },
        stats);
}

}  // namespace dynwild
