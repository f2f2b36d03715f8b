#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "gmqh/exactpoly/rational.hpp"

namespace gmqh::cli {

using Json = nlohmann::ordered_json;

enum class Status { Verified, Failed, ModelAxiom };
std::string status_name(Status s);

// reference: a displayed value; oracle: an independent computation;
// identity: a trivial consequence.
enum class Provenance { Reference, Oracle, Identity };
std::string provenance_name(Provenance p);

struct Certificate {
  std::string id;
  Status status = Status::Failed;
  Provenance provenance = Provenance::Reference;
  Json inputs = Json::object();
  Json computed;
  Json expected;
  std::vector<std::string> trace;
  std::vector<std::string> notes;
  Json witness;  // null unless failed
};

struct Options {
  std::string format = "json";
  std::optional<Rational> q0, t0;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  bool timestamp = true;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::vector<std::string>& commands();

// Certificates of one command, sorted by id. Throws UsageError for an
// unknown command.
std::vector<Certificate> certify(const std::string& command, const Options& opt);

bool any_failed(const std::vector<Certificate>& certs);

Json to_json(const Certificate& c);
// Array of certificates; each carries "generated" when opt.timestamp is set.
std::string render_json(const std::vector<Certificate>& certs, const Options& opt);
std::string render_markdown(const std::string& command, const std::vector<Certificate>& certs, const Options& opt);

// Parses "q=1,t=1/2".
void parse_at(const std::string& text, Options& opt);

// Full driver: returns the exit code.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

// Oracle suites shared with the acceptance binary.
struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::vector<std::string> failures;
  bool ok() const { return cases > 0 && failures.empty(); }
};
SuiteResult grassmann_bundle_vs_schubert();
SuiteResult closed_forms_vs_roots(std::uint64_t seed, int rounds = 25);
SuiteResult grassmannian_duality();
SuiteResult ring_axioms(std::uint64_t seed, int count = 100);
SuiteResult closed_form_J2_vs_associativity(std::uint64_t seed, int rounds = 8);

}  // namespace gmqh::cli
