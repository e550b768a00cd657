#include "renewest/errors.hpp"

namespace renewest {

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::invalid_input:
      return "invalid_input";
    case errc::horizon_insufficient:
      return "horizon_insufficient";
    case errc::degenerate_normalization:
      return "degenerate_normalization";
    case errc::invalid_partition:
      return "invalid_partition";
    case errc::bad_config:
      return "bad_config";
    case errc::io_failure:
      return "io_failure";
  }
  return "unknown";
}

}  // namespace renewest
