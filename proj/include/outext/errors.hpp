#pragma once

#include <stdexcept>
#include <string>

namespace outext {

// Every error carries a short machine-parsable category. The CLI prints
// failures as a single line "error: <category>: <message>".
class Error : public std::runtime_error {
public:
    Error(std::string category, const std::string& message)
        : std::runtime_error(message), category_(std::move(category)) {}
    const std::string& category() const { return category_; }

    std::string diagnostic() const {
        return "error: " + category_ + ": " + what();
    }

private:
    std::string category_;
};

inline Error load_error(const std::string& m) { return Error("load", m); }
inline Error conflict_error(const std::string& m) { return Error("conflict", m); }
inline Error coverage_error(const std::string& m) { return Error("coverage", m); }
inline Error invariant_error(const std::string& m) { return Error("invariant", m); }
inline Error usage_error(const std::string& m) { return Error("usage", m); }

}  // namespace outext
