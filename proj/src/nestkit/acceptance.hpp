#pragma once

#include <functional>
#include <string>

namespace nestkit {

// Runs the verification suite, emitting one pass/fail line per criterion
// (plus detail lines).  Returns the number of failed criteria.  The report
// text is deterministic: identical runs emit identical lines.
int run_acceptance(const std::function<void(const std::string&)>& emit);

} // namespace nestkit
