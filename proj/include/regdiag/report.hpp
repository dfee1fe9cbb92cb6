#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace regdiag {

// Outcome of one named law or clause inside a larger validation run.
// `checked` counts the instances actually tested; `sampled` is true when the
// instance space was larger than the budget and a seeded sample was used
// instead of exhaustive enumeration.
struct ClauseResult {
    std::string name;
    std::uint64_t checked = 0;
    bool sampled = false;
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    bool passed() const { return failures.empty(); }
};

struct Report {
    std::string title;
    std::vector<ClauseResult> clauses;

    bool ok() const {
        for (const auto& c : clauses)
            if (!c.passed()) return false;
        return true;
    }

    ClauseResult* find(const std::string& name) {
        for (auto& c : clauses)
            if (c.name == name) return &c;
        return nullptr;
    }
    const ClauseResult* find(const std::string& name) const {
        for (const auto& c : clauses)
            if (c.name == name) return &c;
        return nullptr;
    }

    std::string summary(bool verbose = false) const {
        std::ostringstream os;
        os << title << ": " << (ok() ? "ok" : "FAILED") << "\n";
        for (const auto& c : clauses) {
            os << "  [" << (c.passed() ? "ok" : "FAIL") << "] " << c.name
               << " (" << c.checked << (c.sampled ? " sampled" : "") << ")";
            os << "\n";
            std::size_t shown = 0;
            for (const auto& f : c.failures) {
                if (!verbose && shown == 3) {
                    os << "      ... " << (c.failures.size() - shown)
                       << " more failure(s)\n";
                    break;
                }
                os << "      " << f << "\n";
                ++shown;
            }
            if (verbose)
                for (const auto& n : c.notes) os << "      note: " << n << "\n";
        }
        return os.str();
    }
};

} // namespace regdiag
