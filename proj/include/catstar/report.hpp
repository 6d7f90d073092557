#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace catstar {

// Machine-readable run report; the human rendering is derived from the JSON
// document, never assembled separately. Identical inputs produce identical
// reports, including witness order.
class RunReport {
 public:
  explicit RunReport(const std::string& command);

  void add_input(const std::string& path);
  void add_param(const std::string& key, const std::string& value);
  void add_verdict(const std::string& name, bool ok, const std::string& detail = "");
  void add_witness(const std::string& text);
  void set_error(const std::string& kind, const std::string& message);
  void set_exit(int code);

  int exit_code() const;
  std::string to_json() const;
  std::string to_human() const;

  nlohmann::ordered_json& raw() { return j_; }

 private:
  nlohmann::ordered_json j_;
};

std::uint64_t fnv1a_file(const std::string& path);  // throws StructuralError if unreadable

}  // namespace catstar
