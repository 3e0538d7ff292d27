#pragma once
// Command-line front end. Exit codes: 0 accepted / success / equivalent,
// 1 rejected / failure / counterexample, 2 usage, parse or budget error.

#include <ostream>

namespace alba::cli {

constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace alba::cli
