#pragma once

#include <stdexcept>
#include <string>

namespace assocalg {

/// Base of every exception thrown by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define ASSOCALG_DEFINE_ERROR(name)      \
  class name : public error {            \
   public:                               \
    using error::error;                  \
  }

ASSOCALG_DEFINE_ERROR(division_by_zero);
ASSOCALG_DEFINE_ERROR(parse_error);
ASSOCALG_DEFINE_ERROR(non_square);
ASSOCALG_DEFINE_ERROR(dimension_mismatch);
ASSOCALG_DEFINE_ERROR(index_out_of_range);
ASSOCALG_DEFINE_ERROR(duplicate_product);
ASSOCALG_DEFINE_ERROR(singular_matrix);
ASSOCALG_DEFINE_ERROR(constraint_violated);
ASSOCALG_DEFINE_ERROR(inexact_root);
ASSOCALG_DEFINE_ERROR(unbound_parameter);
ASSOCALG_DEFINE_ERROR(excluded_parameter);
ASSOCALG_DEFINE_ERROR(associativity_failure);
ASSOCALG_DEFINE_ERROR(internal_inconsistency);
ASSOCALG_DEFINE_ERROR(unknown_entry);

#undef ASSOCALG_DEFINE_ERROR

}  // namespace assocalg
