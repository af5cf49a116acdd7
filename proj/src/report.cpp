#include "jacal/report.hpp"

#include <sstream>

namespace jacal {

const char* verdict_str(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "FAIL";
        case Verdict::Skipped: return "skipped";
    }
    return "?";
}

void Report::pass(const std::string& name) { items.push_back({name, Verdict::Pass, "", "", ""}); }

void Report::fail(const std::string& name, const std::string& where, const std::string& residual) {
    items.push_back({name, Verdict::Fail, where, residual, ""});
}

void Report::skip(const std::string& name, const std::string& why) {
    items.push_back({name, Verdict::Skipped, "", "", why});
}

void Report::absorb(const std::string& prefix, const Report& sub) {
    for (const auto& it : sub.items) {
        CheckItem copy = it;
        copy.name = prefix + copy.name;
        items.push_back(std::move(copy));
    }
}

bool Report::passed() const {
    for (const auto& it : items)
        if (it.verdict == Verdict::Fail) return false;
    return true;
}

std::size_t Report::fail_count() const {
    std::size_t n = 0;
    for (const auto& it : items)
        if (it.verdict == Verdict::Fail) ++n;
    return n;
}

std::string Report::text() const {
    std::ostringstream out;
    if (!title.empty()) out << title << "\n";
    for (const auto& it : items) {
        out << "  [" << verdict_str(it.verdict) << "] " << it.name;
        if (!it.where.empty()) out << " at " << it.where;
        if (!it.residual.empty()) out << "; residual = " << it.residual;
        if (!it.note.empty()) out << " (" << it.note << ")";
        out << "\n";
    }
    return out.str();
}

}  // namespace jacal
