#include "catstar/report.hpp"

#include <fstream>
#include <sstream>

#include "catstar/errors.hpp"

namespace catstar {

RunReport::RunReport(const std::string& command) {
  j_["schema"] = 1;
  j_["command"] = command;
  j_["inputs"] = nlohmann::ordered_json::array();
  j_["params"] = nlohmann::ordered_json::object();
  j_["verdicts"] = nlohmann::ordered_json::array();
  j_["witnesses"] = nlohmann::ordered_json::array();
  j_["exit"] = 0;
}

void RunReport::add_input(const std::string& path) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a_file(path)));
  j_["inputs"].push_back({{"path", path}, {"hash", buf}});
}

void RunReport::add_param(const std::string& key, const std::string& value) {
  j_["params"][key] = value;
}

void RunReport::add_verdict(const std::string& name, bool ok, const std::string& detail) {
  nlohmann::ordered_json v{{"name", name}, {"ok", ok}};
  if (!detail.empty()) v["detail"] = detail;
  j_["verdicts"].push_back(v);
}

void RunReport::add_witness(const std::string& text) { j_["witnesses"].push_back(text); }

void RunReport::set_error(const std::string& kind, const std::string& message) {
  j_["error"] = {{"kind", kind}, {"message", message}};
}

void RunReport::set_exit(int code) { j_["exit"] = code; }

int RunReport::exit_code() const { return j_.at("exit").get<int>(); }

std::string RunReport::to_json() const { return j_.dump(2) + "\n"; }

std::string RunReport::to_human() const {
  std::ostringstream os;
  os << "== " << j_.at("command").get<std::string>() << " ==\n";
  for (const auto& in : j_.at("inputs"))
    os << "input " << in.at("path").get<std::string>() << " [" << in.at("hash").get<std::string>()
       << "]\n";
  for (auto it = j_.at("params").begin(); it != j_.at("params").end(); ++it)
    os << "param " << it.key() << " = " << it.value().get<std::string>() << "\n";
  for (const auto& v : j_.at("verdicts")) {
    os << (v.at("ok").get<bool>() ? "PASS " : "FAIL ") << v.at("name").get<std::string>();
    if (v.contains("detail")) os << ": " << v.at("detail").get<std::string>();
    os << "\n";
  }
  for (const auto& w : j_.at("witnesses")) os << "witness: " << w.get<std::string>() << "\n";
  if (j_.contains("error"))
    os << "error (" << j_.at("error").at("kind").get<std::string>()
       << "): " << j_.at("error").at("message").get<std::string>() << "\n";
  os << "exit " << j_.at("exit").get<int>() << "\n";
  return os.str();
}

std::uint64_t fnv1a_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StructuralError("cannot open input file: " + path);
  std::uint64_t h = 1469598103934665603ull;
  char c;
  while (in.get(c)) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace catstar
