#ifndef AGH_ERRORS_HPP
#define AGH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace agh {

// Every thrown error carries a short machine-readable code (the CLI prints it
// and maps the category to an exit code) plus a human-readable message.
class Error : public std::runtime_error {
public:
    enum class Category { Validation, Budget, Verification, Usage, Internal };

    Error(Category cat, std::string code, const std::string& msg)
        : std::runtime_error(code + ": " + msg), cat_(cat), code_(std::move(code)) {}

    Category category() const noexcept { return cat_; }
    const std::string& code() const noexcept { return code_; }

private:
    Category cat_;
    std::string code_;
};

[[noreturn]] inline void throwValidation(const char* code, const std::string& msg) {
    throw Error(Error::Category::Validation, code, msg);
}
[[noreturn]] inline void throwBudget(const char* code, const std::string& msg) {
    throw Error(Error::Category::Budget, code, msg);
}
[[noreturn]] inline void throwVerification(const char* code, const std::string& msg) {
    throw Error(Error::Category::Verification, code, msg);
}
[[noreturn]] inline void throwUsage(const char* code, const std::string& msg) {
    throw Error(Error::Category::Usage, code, msg);
}
[[noreturn]] inline void throwInternal(const char* code, const std::string& msg) {
    throw Error(Error::Category::Internal, code, msg);
}

} // namespace agh

#endif
