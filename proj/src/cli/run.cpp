#include <chrono>
#include <ctime>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"

#include "gmqh/cli/certificate.hpp"

namespace gmqh::cli {

namespace {

constexpr int kSchemaVersion = 1;

std::string utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

std::string inline_json(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

std::string usage() {
  std::string s = "usage: gmqh <command> [--format json|markdown] [--at q=<r>[,t=<r>]] [--seed <n>] [--jobs <n>] "
                  "[--no-timestamp]\ncommands:";
  for (const auto& c : commands()) s += " " + c;
  return s + "\n";
}

}  // namespace

Json to_json(const Certificate& c) {
  Json j;
  j["id"] = c.id;
  j["status"] = status_name(c.status);
  j["provenance"] = provenance_name(c.provenance);
  j["inputs"] = c.inputs;
  j["computed"] = c.computed;
  j["expected"] = c.expected;
  j["trace"] = c.trace;
  j["notes"] = c.notes;
  if (c.status == Status::Failed)
    j["witness"] = c.witness.is_null() ? Json("computed value differs from the expected value") : c.witness;
  return j;
}

std::string render_json(const std::vector<Certificate>& certs, const Options& opt) {
  Json arr = Json::array();
  const std::string stamp = opt.timestamp ? utc_now() : "";
  for (const auto& c : certs) {
    Json j;
    j["schema"] = kSchemaVersion;
    const Json body = to_json(c);
    for (const auto& [k, v] : body.items()) j[k] = v;
    if (opt.timestamp) j["generated"] = stamp;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

std::string render_markdown(const std::string& command, const std::vector<Certificate>& certs, const Options& opt) {
  std::ostringstream out;
  out << "# gmqh " << command << "\n\n";
  if (opt.timestamp) out << "Generated " << utc_now() << ".\n\n";
  out << "| id | status | provenance |\n|---|---|---|\n";
  for (const auto& c : certs)
    out << "| `" << c.id << "` | " << status_name(c.status) << " | " << provenance_name(c.provenance) << " |\n";
  for (const auto& c : certs) {
    out << "\n## " << c.id << " (" << status_name(c.status) << ")\n\n";
    out << "- provenance: " << provenance_name(c.provenance) << "\n";
    for (const auto& [k, v] : c.inputs.items()) out << "- input `" << k << "`: " << inline_json(v) << "\n";
    if (c.computed.is_object()) {
      for (const auto& [k, v] : c.computed.items()) out << "- computed `" << k << "`: " << inline_json(v) << "\n";
    } else if (c.computed.is_array() && !c.computed.empty() && c.computed.front().is_array()) {
      out << "- computed:\n\n```\n";
      for (const auto& row : c.computed) out << row.dump() << "\n";
      out << "```\n";
    } else {
      out << "- computed: " << inline_json(c.computed) << "\n";
    }
    out << "- expected: " << inline_json(c.expected) << "\n";
    for (const auto& n : c.notes) out << "- note: " << n << "\n";
    if (c.status == Status::Failed) out << "- witness: " << inline_json(to_json(c)["witness"]) << "\n";
    if (!c.trace.empty()) {
      out << "\n```\n";
      for (const auto& t : c.trace) out << t << "\n";
      out << "```\n";
    }
  }
  return out.str();
}

void parse_at(const std::string& text, Options& opt) {
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("--at expects name=value, got '" + item + "'");
    const std::string name = item.substr(0, eq);
    Rational v;
    try {
      v = parse_rational(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw UsageError("--at: bad rational '" + item.substr(eq + 1) + "'");
    }
    if (name == "q") opt.q0 = v;
    else if (name == "t") opt.t0 = v;
    else throw UsageError("--at: unknown variable '" + name + "'");
  }
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certificates for the small quantum cohomology of Gushel-Mukai fourfolds", "gmqh"};
  Options opt;
  std::string command, at;
  app.add_option("command", command, "gw | matrix | table | presentation | deform | criterion | verify-all")->required();
  app.add_option("--format", opt.format, "json or markdown")->check(CLI::IsMember({"json", "markdown"}));
  app.add_option("--at", at, "specialization, e.g. q=1,t=1/2");
  app.add_option("--seed", opt.seed, "seed for randomized oracle suites");
  app.add_option("--jobs", opt.jobs, "parallel workers")->check(CLI::PositiveNumber);
  bool no_timestamp = false;
  app.add_flag("--no-timestamp", no_timestamp, "omit the generated timestamp");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help() << usage();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "gmqh: " << e.what() << "\n" << usage();
    return 2;
  }
  opt.timestamp = !no_timestamp;
  try {
    if (!at.empty()) parse_at(at, opt);
    const auto certs = certify(command, opt);
    out << (opt.format == "markdown" ? render_markdown(command, certs, opt) : render_json(certs, opt));
    return any_failed(certs) ? 1 : 0;
  } catch (const UsageError& e) {
    err << "gmqh: " << e.what() << "\n" << usage();
    return 2;
  } catch (const std::exception& e) {
    err << "gmqh: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace gmqh::cli
