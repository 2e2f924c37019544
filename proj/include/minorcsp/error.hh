/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef MINORCSP_GUARD_ERROR_HH
#define MINORCSP_GUARD_ERROR_HH 1

#include <stdexcept>
#include <string>

namespace minorcsp
{
    enum class ErrorCode
    {
        SamePartEdge,
        UnknownPoint,
        UnknownPart,
        SamePart,
        UnknownName,
        PreconditionViolated,
        ArityMismatch,
        PartialTable,
        DomainMismatch,
        CapExceeded,
        NotAcyclic,
        NotInClass,
        Disconnected,
        SizeLimitExceeded,
        BudgetExceeded,
        BadDensity,
        BadInput
    };

    auto error_code_name(ErrorCode) -> const char *;

    class Error : public std::runtime_error
    {
        private:
            ErrorCode _code;

        public:
            Error(ErrorCode c, const std::string & message);

            auto code() const -> ErrorCode
            {
                return _code;
            }
    };
}

#endif
