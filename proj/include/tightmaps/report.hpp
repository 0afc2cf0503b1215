#pragma once

#include <cstddef>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace tightmaps {

struct Failure {
  std::string inputs;
  std::string expected;
  std::string got;
};

// Outcome of a verification suite: number of cases checked and the failures,
// capped so a systematic bug does not produce gigabytes of output.
struct CheckReport {
  std::string name;
  long cases = 0;
  std::vector<Failure> failures;
  static constexpr std::size_t kMaxFailures = 25;

  bool pass() const { return failures.empty(); }

  template <class A, class B, class F>
  void expect_eq(const A& expected, const B& got, F&& inputs) {
    ++cases;
    if (!(expected == got) && failures.size() < kMaxFailures) {
      failures.push_back({inputs(), to_text(expected), to_text(got)});
    }
  }

  void merge(const CheckReport& other) {
    cases += other.cases;
    for (const auto& f : other.failures) {
      if (failures.size() >= kMaxFailures) break;
      Failure tagged = f;
      tagged.inputs = other.name + ": " + f.inputs;
      failures.push_back(std::move(tagged));
    }
  }

 private:
  template <class T>
  static std::string to_text(const T& v) {
    if constexpr (std::is_same_v<T, std::string>) {
      return v;
    } else if constexpr (std::is_arithmetic_v<T>) {
      return std::to_string(v);
    } else {
      return v.str();
    }
  }
};

}  // namespace tightmaps
