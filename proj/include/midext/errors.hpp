#pragma once

#include <stdexcept>
#include <string>

namespace midext {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct dimension_mismatch : error { using error::error; };
struct unsupported_field : error { using error::error; };
struct field_mismatch : error { using error::error; };
struct zero_input : error { using error::error; };
struct division_by_zero : error { using error::error; };
struct odd_rank : error { using error::error; };
struct irregular_form : error { using error::error; };
struct not_exact : error { using error::error; };
struct not_lagrangian : error { using error::error; };
struct not_decomposable : error { using error::error; };
struct mixed_type : error { using error::error; };
struct singular_matrix : error { using error::error; };
struct premise_failed : error { using error::error; };
struct budget_exceeded : error { using error::error; };
struct not_a_summand : error { using error::error; };
struct out_of_range : error { using error::error; };
struct degree_mismatch : error { using error::error; };
struct saturation_failure : error { using error::error; };
struct sign_convention_failure : error { using error::error; };
struct parse_error : error { using error::error; };

} // namespace midext
