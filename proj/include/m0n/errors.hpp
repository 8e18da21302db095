#pragma once

#include <stdexcept>

namespace m0n {

struct SizeOutOfRange : std::invalid_argument { using std::invalid_argument::invalid_argument; };
struct EmptyOrFull : std::invalid_argument { using std::invalid_argument::invalid_argument; };
struct AdjacentDivisor : std::invalid_argument { using std::invalid_argument::invalid_argument; };
struct InvalidPartition : std::invalid_argument { using std::invalid_argument::invalid_argument; };
struct BadSize : std::invalid_argument { using std::invalid_argument::invalid_argument; };
struct NotACurve : std::invalid_argument { using std::invalid_argument::invalid_argument; };
struct NotOneDimensional : std::invalid_argument { using std::invalid_argument::invalid_argument; };
struct DegenerateFamily : std::invalid_argument { using std::invalid_argument::invalid_argument; };
struct ParseError : std::invalid_argument { using std::invalid_argument::invalid_argument; };

struct Timeout : std::runtime_error { using std::runtime_error::runtime_error; };
struct BudgetExhausted : std::runtime_error { using std::runtime_error::runtime_error; };
struct GermDepthExceeded : std::runtime_error { using std::runtime_error::runtime_error; };
struct UnsupportedFieldExtension : std::runtime_error { using std::runtime_error::runtime_error; };
struct UnsupportedExceptionalLocus : std::runtime_error { using std::runtime_error::runtime_error; };

}
