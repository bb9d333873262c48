#pragma once

#include <string_view>

namespace crosscap {

enum class Verdict { Pass, Fail, Undecided };

inline std::string_view toString(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "Pass";
    case Verdict::Fail: return "Fail";
    case Verdict::Undecided: return "Undecided";
  }
  return "?";
}

}  // namespace crosscap
