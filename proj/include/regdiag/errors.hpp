#pragma once

#include <stdexcept>
#include <string>

namespace regdiag {

// Base class for all recoverable errors raised by the library. The CLI maps
// these to exit code 2 (bad input) unless stated otherwise.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Composing diagrams or relations whose interface widths do not line up.
struct WidthMismatchError : Error {
    using Error::Error;
};

// Unknown function/predicate symbol, arity clash, or duplicate declaration.
struct SignatureError : Error {
    using Error::Error;
};

// Text or JSON input that does not conform to the documented grammar/schema.
struct ParseError : Error {
    using Error::Error;
};

// A formula or term tuple that fails sort checking against its context width.
struct SortError : Error {
    using Error::Error;
};

// Derivation-step failures.
struct UnknownRuleError : Error {
    using Error::Error;
};
struct BadInstantiationError : Error {
    using Error::Error;
};
struct BackwardOnInequalityError : Error {
    using Error::Error;
};
struct ContextMismatchError : Error {
    using Error::Error;
};

// Finite-model problems: missing tables, carrier bounds, evaluation blow-ups.
struct ModelError : Error {
    using Error::Error;
};

// A requested enumeration or auxiliary object exceeds the configured cap.
struct SizeBudgetError : Error {
    using Error::Error;
};

// Doctrine file loading.
struct SchemaError : Error {
    using Error::Error;
};
struct MissingTableError : Error {
    using Error::Error;
};
struct NonMonotoneReindexingError : Error {
    using Error::Error;
};

// Base-functor data that fails the strictness requirements.
struct NotStrictCartesianError : Error {
    using Error::Error;
};

} // namespace regdiag
