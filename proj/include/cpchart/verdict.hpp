#pragma once

#include <string>
#include <vector>

namespace cpchart {

enum class Status { pass, fail, indeterminate };

inline const char* to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        default: return "indeterminate";
    }
}

struct Witness {
    std::string location;    // which component / which inputs
    std::string expression;  // offending value, formatted
};

struct Verdict {
    Status status = Status::pass;
    std::vector<Witness> witnesses;
    std::vector<std::string> notes;

    bool passed() const { return status == Status::pass; }

    void fail_with(std::string location, std::string expression) {
        status = Status::fail;
        witnesses.push_back({std::move(location), std::move(expression)});
    }

    void mark_indeterminate(std::string note) {
        if (status == Status::pass) status = Status::indeterminate;
        notes.push_back(std::move(note));
    }

    // Combines sub-verdicts: fail dominates, indeterminate beats pass.
    void absorb(const Verdict& v) {
        if (v.status == Status::fail)
            status = Status::fail;
        else if (v.status == Status::indeterminate && status == Status::pass)
            status = Status::indeterminate;
        witnesses.insert(witnesses.end(), v.witnesses.begin(), v.witnesses.end());
        notes.insert(notes.end(), v.notes.begin(), v.notes.end());
    }
};

}  // namespace cpchart
