// Error vocabulary shared across the workbench. Each condition the public
// operations can signal gets its own type so callers can catch precisely,
// and a stable code string so reports can carry it.

#pragma once

#include <stdexcept>
#include <string>

namespace dynideal {

class DynError : public std::runtime_error {
public:
    DynError(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

#define DYNIDEAL_ERROR(Name)                                            \
    class Name : public DynError {                                      \
    public:                                                             \
        explicit Name(const std::string& what) : DynError(#Name, what) {} \
    }

DYNIDEAL_ERROR(GapMismatch);
DYNIDEAL_ERROR(SizeMismatch);
DYNIDEAL_ERROR(UnknownInstance);
DYNIDEAL_ERROR(KindMismatch);
DYNIDEAL_ERROR(Unbounded);
DYNIDEAL_ERROR(CertificateInvalid);
DYNIDEAL_ERROR(InsufficientSpace);
DYNIDEAL_ERROR(NotInIdeal);
DYNIDEAL_ERROR(BudgetExceeded);
DYNIDEAL_ERROR(SearchBudgetExceeded);
DYNIDEAL_ERROR(UnsupportedInstance);
DYNIDEAL_ERROR(CoverFailed);
DYNIDEAL_ERROR(NotAbelian);
DYNIDEAL_ERROR(NoWitness);
DYNIDEAL_ERROR(HostTooSmall);
DYNIDEAL_ERROR(NotAmalgamable);
DYNIDEAL_ERROR(AxiomViolation);
DYNIDEAL_ERROR(StrategyFault);
DYNIDEAL_ERROR(ConfigError);

#undef DYNIDEAL_ERROR

}  // namespace dynideal
