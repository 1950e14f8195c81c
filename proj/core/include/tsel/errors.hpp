#pragma once

#include <stdexcept>
#include <string>

namespace tsel {

/// Base class for all domain errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define TSEL_DEFINE_ERROR(name)                                   \
  class name : public Error {                                     \
   public:                                                        \
    explicit name(const std::string& what = #name) : Error(what) {} \
  }

TSEL_DEFINE_ERROR(MalformedDescriptor);
TSEL_DEFINE_ERROR(DegenerateGeometry);
TSEL_DEFINE_ERROR(NoParticles);
TSEL_DEFINE_ERROR(NonFiniteInput);
TSEL_DEFINE_ERROR(EmptyDataset);
TSEL_DEFINE_ERROR(EmptyVideo);
TSEL_DEFINE_ERROR(UnnormalizedInput);
TSEL_DEFINE_ERROR(EmptyDemoSet);
TSEL_DEFINE_ERROR(EmptyDescriptor);
TSEL_DEFINE_ERROR(UnknownToken);
TSEL_DEFINE_ERROR(KTooLarge);
TSEL_DEFINE_ERROR(EmptyInput);
TSEL_DEFINE_ERROR(NoEligibleRecords);
TSEL_DEFINE_ERROR(TooFewEntries);
TSEL_DEFINE_ERROR(IdMismatch);
TSEL_DEFINE_ERROR(EmptyScores);
TSEL_DEFINE_ERROR(BackendError);
TSEL_DEFINE_ERROR(IoError);

#undef TSEL_DEFINE_ERROR

/// Wraps a failure with the pipeline/experiment stage it occurred in.
class StageError : public Error {
 public:
  StageError(const std::string& stage, const std::string& what)
      : Error("[" + stage + "] " + what), stage_(stage) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

}  // namespace tsel
