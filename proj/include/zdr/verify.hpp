#ifndef ZDR_VERIFY_HPP_
#define ZDR_VERIFY_HPP_

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zdr/io.hpp"

namespace zdr {

  enum class VerdictStatus { pass, fail, inconclusive };

  std::string_view to_string(VerdictStatus s);

  struct Verdict {
    std::string   id;
    VerdictStatus status = VerdictStatus::fail;
    // "PAPER" for published numbers and tables, "DERIVED" for values
    // computed by an independent oracle.
    std::string provenance;
    std::string summary;
    Json        evidence = Json::object();
    double      wall_seconds = 0;
  };

  struct VerifyOptions {
    // Replaces every claim's own time budget.
    std::optional<double> budget_seconds;
    unsigned              threads = 1;
  };

  struct Claim {
    std::string id;
    std::string description;
    std::string tag;  // fast, slow or stretch
    std::string provenance;
    double      budget_seconds;
    std::function<Verdict(Claim const&, EnumerationOptions const&)> check;
  };

  // Registered claims sorted by id.
  std::vector<Claim> const& claim_registry();

  // Throws std::out_of_range for an unknown id.
  Verdict verify_claim(std::string_view id, VerifyOptions const& opts = {});

  // Claims with the given tag (all claims without one), in id order.
  std::vector<Verdict> verify_all(std::optional<std::string> const& tag,
                                  VerifyOptions const&              opts = {});

  Json to_json(Verdict const& v, bool deterministic);

}  // namespace zdr

#endif  // ZDR_VERIFY_HPP_
