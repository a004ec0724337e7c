#pragma once

#include <string>
#include <vector>

namespace surfhom {

// One named residual with its pass threshold.
struct CheckEntry {
    std::string name;
    double residual = 0.0;
    double threshold = 0.0;
    bool pass = true;
};

struct ValidationReport {
    std::vector<CheckEntry> entries;
    std::vector<std::string> notes;

    void add(const std::string& name, double residual, double threshold) {
        entries.push_back({name, residual, threshold, residual < threshold});
    }
    void note(const std::string& text) { notes.push_back(text); }

    bool pass() const {
        for (const auto& e : entries)
            if (!e.pass) return false;
        return true;
    }
    double max_residual() const {
        double m = 0.0;
        for (const auto& e : entries) m = std::max(m, e.residual);
        return m;
    }
    double residual_of(const std::string& name) const {
        for (const auto& e : entries)
            if (e.name == name) return e.residual;
        return -1.0;
    }
};

}  // namespace surfhom
