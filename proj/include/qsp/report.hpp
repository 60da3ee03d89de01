#pragma once

#include <string>
#include <vector>

namespace qsp {

/// Outcome of a verification routine: pass/fail plus human-readable detail lines.
struct CheckReport {
    std::string name;
    bool pass = true;
    bool conjectural = false;
    std::vector<std::string> lines;
    void fail(const std::string& line) {
        pass = false;
        lines.push_back(line);
    }
    void note(const std::string& line) { lines.push_back(line); }
    void merge(const CheckReport& o);
    std::string str() const;
};

}  // namespace qsp
