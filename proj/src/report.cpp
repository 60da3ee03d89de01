#include "qsp/report.hpp"

#include <sstream>

namespace qsp {

void CheckReport::merge(const CheckReport& o) {
    pass = pass && o.pass;
    conjectural = conjectural || o.conjectural;
    for (const auto& l : o.lines) lines.push_back(o.name + ": " + l);
}

std::string CheckReport::str() const {
    std::ostringstream os;
    os << name << ": " << (pass ? "PASS" : "FAIL") << (conjectural ? " (conjectural)" : "");
    for (const auto& l : lines) os << "\n  " << l;
    return os.str();
}

}  // namespace qsp
