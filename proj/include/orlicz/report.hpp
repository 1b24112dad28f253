#pragma once

#include <map>
#include <optional>
#include <string>

namespace orlicz {

// Every comparison or growth probe runs on finite data, so "holds" always
// means "holds at the materialized horizon with a stable margin".  A probe
// that can neither stabilize nor refute reports Inconclusive instead of
// guessing.
enum class Verdict { Holds, Fails, Inconclusive };

const char* to_string(Verdict v);

// Outcome of a comparison probe between two sequences or two functions.
// `witnesses` carries the fitted constants of the defining inequality
// (key names are documented per operation); `counterexample` is the index
// or abscissa where the inequality failed persistently.
struct RelationEvidence {
  std::string relation;
  Verdict verdict = Verdict::Inconclusive;
  std::map<std::string, double> witnesses;
  std::optional<double> counterexample;
  std::string note;
};

// Outcome of a growth-condition check.  `route` names the criterion that
// decided the verdict.
struct ConditionReport {
  std::string condition;
  Verdict verdict = Verdict::Inconclusive;
  std::map<std::string, double> witnesses;
  std::optional<double> counterexample;
  std::string route;
  std::string note;
};

}  // namespace orlicz
