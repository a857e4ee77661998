#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zflab {

// Every failure raised by the library derives from Error. `kind()` is the
// stable name used in diagnostic records.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

#define ZFLAB_DEFINE_ERROR(Name)                                           \
  struct Name : Error {                                                    \
    explicit Name(const std::string& what) : Error(#Name, what) {}         \
  }

ZFLAB_DEFINE_ERROR(CapExceeded);
ZFLAB_DEFINE_ERROR(NotAPair);
ZFLAB_DEFINE_ERROR(UnboundVariable);
ZFLAB_DEFINE_ERROR(PairOutOfCarrier);
ZFLAB_DEFINE_ERROR(NoLeast);
ZFLAB_DEFINE_ERROR(NotUniquelySatisfied);
ZFLAB_DEFINE_ERROR(NotLiftShaped);
ZFLAB_DEFINE_ERROR(SampleOutsideInterval);
ZFLAB_DEFINE_ERROR(IoError);
ZFLAB_DEFINE_ERROR(EmptyFamily);
ZFLAB_DEFINE_ERROR(InvalidArgument);

#undef ZFLAB_DEFINE_ERROR

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error("ParseError", what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// `component` is the offending index for hyper-interval input, or npos.
class EmptyInterval : public Error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  explicit EmptyInterval(const std::string& what, std::size_t component = npos)
      : Error("EmptyInterval", what), component_(component) {}
  std::size_t component() const { return component_; }

 private:
  std::size_t component_;
};

}  // namespace zflab
