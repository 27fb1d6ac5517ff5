#pragma once

#include <stdexcept>
#include <string>

namespace bip {

/// Base of every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

#define BIP_DEFINE_ERROR(Name)                                        \
    class Name : public Error                                         \
    {                                                                 \
    public:                                                           \
        explicit Name(const std::string& what = #Name) : Error(what) {} \
    }

BIP_DEFINE_ERROR(NotAPermutation);
BIP_DEFINE_ERROR(RankMismatch);
BIP_DEFINE_ERROR(DuplicateValue);
BIP_DEFINE_ERROR(RankTooLarge);
BIP_DEFINE_ERROR(NotInInterval);
BIP_DEFINE_ERROR(NotBiclosed);
BIP_DEFINE_ERROR(NoUniqueMax);
BIP_DEFINE_ERROR(PreconditionViolated);
BIP_DEFINE_ERROR(CyclicInput);
// Two independently implemented formulas disagree; always an implementation bug.
BIP_DEFINE_ERROR(InternalDisagreement);
BIP_DEFINE_ERROR(CriteriaDisagree);
BIP_DEFINE_ERROR(OracleUnavailable);
BIP_DEFINE_ERROR(DimensionMismatch);
BIP_DEFINE_ERROR(DimensionTooLarge);
BIP_DEFINE_ERROR(UnknownTheorem);

#undef BIP_DEFINE_ERROR

} // namespace bip
