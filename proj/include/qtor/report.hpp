#pragma once

#include <string>
#include <vector>

namespace qtor {

struct Mismatch {
    std::string location;
    std::string lhs;
    std::string rhs;
};

// Structured outcome of one check: pass iff the mismatch list is empty.
struct Report {
    std::string id;
    std::string params;
    long long cells = 0;
    std::vector<Mismatch> mismatches;
    std::string notes;
    double millis = 0.0;

    bool pass() const { return mismatches.empty(); }

    void count_cell() { ++cells; }
    void mismatch(std::string location, std::string lhs, std::string rhs) {
        mismatches.push_back({std::move(location), std::move(lhs), std::move(rhs)});
    }
    void note(const std::string& line) {
        if (!notes.empty()) notes += "; ";
        notes += line;
    }
    void absorb(const Report& sub) {
        cells += sub.cells;
        for (const auto& m : sub.mismatches) mismatches.push_back(m);
        if (!sub.notes.empty()) note(sub.notes);
    }
};

}  // namespace qtor
