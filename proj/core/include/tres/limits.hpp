/*
 * This file is part of tres, a clausal temporal resolution prover for
 * propositional discrete linear-time temporal logic.
 *
 * Distributed under the MIT licence; see LICENSE for details.
 */
/**
 * @file limits.hpp
 * Resource caps shared by the engines.  Hitting a cap is reported by an
 * exception, never by a verdict: the caller decides how to surface it.
 */

#ifndef TRES_LIMITS_HPP
#define TRES_LIMITS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tres {

/// Raised when an operation would exceed a configured resource cap.
struct ResourceLimitError : std::runtime_error {
  explicit ResourceLimitError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Maximum number of step clauses the naive loop search accepts (the
/// search enumerates all non-empty clause subsets).
inline constexpr std::size_t kDefaultLoopWidthCap = 16;

/// Maximum number of distinct symbols in a propositional entailment
/// check (the check enumerates all valuations).
inline constexpr std::size_t kDefaultEntailmentCap = 20;

/// Maximum symbol-universe size for the behaviour-graph procedures.
inline constexpr std::size_t kDefaultOracleCap = 12;

} // namespace tres

#endif // TRES_LIMITS_HPP
