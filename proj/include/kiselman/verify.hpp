// Machine check of the structural results on K_n at a fixed rank.
//
// Each suite checks one family of identities, exhaustively where the
// semigroup is small enough and on seeded random samples otherwise, and
// records counterexamples instead of stopping at the first one.

#ifndef KISELMAN_VERIFY_HPP_
#define KISELMAN_VERIFY_HPP_

#include <cstddef>      // for size_t
#include <cstdint>      // for uint64_t
#include <string>       // for string
#include <string_view>  // for string_view
#include <utility>      // for pair
#include <vector>       // for vector

#include "enumerate.hpp"  // for default_element_limit

namespace kiselman {

  enum class SuiteStatus { passed, failed, skipped };

  std::string_view to_string(SuiteStatus status) noexcept;

  struct SuiteResult {
    std::string                                      name;
    SuiteStatus                                      status = SuiteStatus::passed;
    std::size_t                                      checked = 0;
    std::vector<std::string>                         counterexamples;
    std::vector<std::pair<std::string, std::string>> facts;
    std::string                                      note;
  };

  struct VerifyOptions {
    std::size_t              rank            = 3;
    std::uint64_t            seed            = 0;
    std::size_t              limit           = default_element_limit;
    std::size_t              random_words    = 10'000;
    std::size_t              max_word_length = 12;
    std::size_t              triple_samples  = 100'000;
    std::size_t              pair_samples    = 1'000'000;
    // Exhaustive pair scans up to this |K_n|; sampled above.
    std::size_t              exhaustive_size = 2'000;
    // Suite names to run; empty means all.
    std::vector<std::string> suites;
  };

  struct VerifyReport {
    std::size_t              rank = 0;
    std::uint64_t            seed = 0;
    std::vector<SuiteResult> suites;
    bool                     aborted = false;
    std::string              abort_reason;

    [[nodiscard]] bool passed() const noexcept;
  };

  // Names of all suites, in execution order.
  std::vector<std::string> const& suite_names();

  // Runs the selected suites.  Unknown suite names throw ValidationError.  A
  // ResourceError stops the run and marks the report aborted; suites not yet
  // run are listed as skipped.
  VerifyReport run_verification(VerifyOptions const& options);

}  // namespace kiselman

#endif  // KISELMAN_VERIFY_HPP_
