// Runs the verification suite and exits nonzero if any criterion fails.

#include <cstdio>

#include "nestkit.h"

int main() {
  const int failures =
      nk_verify([](const char* line, void*) { std::printf("%s\n", line); },
                nullptr);
  if (failures < 0) {
    std::fprintf(stderr, "verification suite failed to run: %s\n",
                 nk_last_error());
    return 2;
  }
  return failures == 0 ? 0 : 1;
}
