#pragma once

#include <optional>
#include <string>
#include <vector>

namespace koszul {

enum class Status { Holds, Fails, Inconclusive };

const char* status_name(Status s);

struct Verdict {
  Status status = Status::Holds;
  std::string witness;
  std::optional<int> degree;
  // Highest internal degree examined; absent when the data was complete.
  std::optional<int> window;
  std::vector<std::string> notes;

  static Verdict holds() { return Verdict{}; }
  static Verdict fails(std::string witness, std::optional<int> degree = std::nullopt) {
    Verdict v;
    v.status = Status::Fails;
    v.witness = std::move(witness);
    v.degree = degree;
    return v;
  }
  static Verdict inconclusive(std::string why) {
    Verdict v;
    v.status = Status::Inconclusive;
    v.witness = std::move(why);
    return v;
  }
  bool ok() const { return status == Status::Holds; }
  bool failed() const { return status == Status::Fails; }
};

// Conjunction: Fails dominates Inconclusive, which dominates Holds.
Verdict both(const Verdict& a, const Verdict& b);

}  // namespace koszul
