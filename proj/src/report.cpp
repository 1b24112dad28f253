#include "orlicz/report.hpp"

namespace orlicz {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds:
      return "Holds";
    case Verdict::Fails:
      return "Fails";
    default:
      return "Inconclusive";
  }
}

}  // namespace orlicz
