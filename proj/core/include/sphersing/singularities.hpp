#pragma once

#include "sphersing/colored_fan.hpp"
#include "sphersing/divisor.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sphersing {

enum class Tri { True, False, NotApplicable };
enum class SmoothStatus { True, False, Undetermined };

std::string to_string(Tri t);
std::string to_string(SmoothStatus s);

struct Discrepancy {
  IVec ray;   // primitive generator of an exceptional divisor's edge
  Rat value;  // support-function value minus one
};

enum class FactorialityVerdict { LocallyFactorial, QFactorial, Neither };
struct FactorialityResult {
  FactorialityVerdict verdict;
  std::string certificate;
};
FactorialityResult factoriality(const ColoredFan& fan);

enum class GorensteinVerdict { Gorenstein, QGorenstein, Neither };
struct GorensteinResult {
  GorensteinVerdict verdict;
  std::vector<QVec> m;  // support covectors per maximal cone when (Q-)Gorenstein
  std::string certificate;
};
GorensteinResult gorenstein(const ColoredFan& fan);

enum class TermVerdict { Terminal, CanonicalNotTerminal, NotCanonical };
struct TermResult {
  TermVerdict verdict;
  std::optional<IVec> witness;  // lattice point breaking the stronger verdicts
  Rat witness_value = 0;
};
/// Lattice enumeration on C cap V per cone.  Throws "NotQGorenstein".
TermResult terminal_canonical(const ColoredFan& fan);

Tri log_terminal(const ColoredFan& fan);

/// Exceptional rays of the colorless resolution with their discrepancies.
/// Throws "NotQGorenstein".
std::vector<Discrepancy> discrepancies(const ColoredFan& fan);

/// Throws "NotEffective" and "NotQCartier".
bool klt_check(const ColoredFan& fan, const BWeilDivisor& d);

std::optional<BWeilDivisor> find_klt_pair(const ColoredFan& fan);

SmoothStatus smooth_status(const ColoredFan& fan);

struct SingularityReport {
  Tri q_factorial = Tri::NotApplicable;
  Tri locally_factorial = Tri::NotApplicable;
  Tri q_gorenstein = Tri::NotApplicable;
  Tri gorenstein = Tri::NotApplicable;
  Tri terminal = Tri::NotApplicable;
  Tri canonical = Tri::NotApplicable;
  Tri log_term = Tri::NotApplicable;
  SmoothStatus smooth = SmoothStatus::Undetermined;
  std::map<std::string, std::string> certificates;
  std::optional<std::vector<Discrepancy>> discrepancy_list;
};

SingularityReport classify(const ColoredFan& fan);

/// One-line classification label in the fixed vocabulary.
std::string classification_label(const ColoredFan& fan, const SingularityReport& report);

}  // namespace sphersing
