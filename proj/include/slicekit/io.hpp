#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "slicekit/calculus.hpp"
#include "slicekit/cube.hpp"

namespace slicekit {

// Structured text formats; all numeric payloads are "num/den" strings and
// round-trip bit-exactly.
std::string slice_function_to_json(const SliceFunction& f);
SliceFunction slice_function_from_json(const std::string& text);
std::string cube_function_to_json(const CubeFunction& f);
CubeFunction cube_function_from_json(const std::string& text);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

// Lines of the form "(a1,b1)(a2,b2) := num/den".
std::string derivative_assignment_to_text(const DerivativeAssignment& z);
DerivativeAssignment parse_derivative_assignment(const std::string& text, int n);

using AnyFunction = std::variant<SliceFunction, CubeFunction>;

// Generator grammar:
//   const:<rational> | dictator:<i> | and:<i,j,...> | psi:<tuple> |
//   chi:<i,j,...> | maj | parity:<i,j,...> (cube only) |
//   random-bool:<seed> | random-rat:<seed> | file:<path>
SliceFunction parse_slice_function_spec(const std::string& text, DomainPtr d);
CubeFunction parse_cube_function_spec(const std::string& text, int n);

}  // namespace slicekit
