// report.hpp - structured pass/fail reports emitted by the verifiers.
#pragma once

#include <string>
#include <vector>

namespace jacal {

enum class Verdict { Pass, Fail, Skipped };

struct CheckItem {
    std::string name;      // which identity or axiom
    Verdict verdict = Verdict::Pass;
    std::string where;     // first violating frame tuple / sample point, if any
    std::string residual;  // canonically printed residual section, if any
    std::string note;      // e.g. reason for a skip
};

struct Report {
    std::string title;
    std::vector<CheckItem> items;

    void pass(const std::string& name);
    void fail(const std::string& name, const std::string& where, const std::string& residual);
    void skip(const std::string& name, const std::string& why);
    // Merge a sub-report as prefixed items.
    void absorb(const std::string& prefix, const Report& sub);

    // True when no item failed (skips do not count against a pass).
    bool passed() const;
    std::size_t fail_count() const;

    std::string text() const;  // deterministic, one line per item
};

const char* verdict_str(Verdict v);

}  // namespace jacal
