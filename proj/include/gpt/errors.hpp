#pragma once

#include <stdexcept>
#include <string>

namespace gpt {

/// Root of every error the toolkit raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define GPT_DEFINE_ERROR(Name)        \
  class Name : public Error {         \
   public:                            \
    using Error::Error;               \
  }

GPT_DEFINE_ERROR(BackendMismatch);
GPT_DEFINE_ERROR(DimensionMismatch);
GPT_DEFINE_ERROR(InvariantViolation);
GPT_DEFINE_ERROR(ZeroProbability);
GPT_DEFINE_ERROR(NotCoexistent);
GPT_DEFINE_ERROR(CompletenessError);
GPT_DEFINE_ERROR(NotIC);
GPT_DEFINE_ERROR(NotFaithful);
GPT_DEFINE_ERROR(NotSymmetric);
GPT_DEFINE_ERROR(DegenerateSplit);
GPT_DEFINE_ERROR(ConeViolation);
GPT_DEFINE_ERROR(UnknownSuite);

#undef GPT_DEFINE_ERROR

}  // namespace gpt
