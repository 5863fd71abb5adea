#include <chrono>
#include <cstdio>
#include <thread>

#include "excol/verify.hpp"

// Times the pairwise verification sweep once on the serial path and once on
// the OpenMP path.  On a single-core host the two should be within noise of
// each other; the comparison is the point, not the absolute numbers.

namespace {

using namespace excol;

double run_once(const Collection& c, ExecPolicy policy) {
  VerifyOptions opts;
  opts.policy = policy;
  const auto t0 = std::chrono::steady_clock::now();
  const VerifyReport r = verify_collection(c, opts);
  const auto t1 = std::chrono::steady_clock::now();
  if (r.fail_count != 0) std::fprintf(stderr, "unexpected failures\n");
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main() {
  std::printf("hardware threads: %u\n", std::thread::hardware_concurrency());
  const MarkingSplit spaces[] = {{7, 0}, {4, 3}, {9, 0}};
  for (const MarkingSplit& s : spaces) {
    const Collection c = enumerate_collection(s, "1A");
    const double serial = run_once(c, ExecPolicy::serial);
    const double par = run_once(c, ExecPolicy::parallel);
    std::printf("p=%d q=%d objects=%3zu  serial %8.1f ms  parallel %8.1f ms  ratio %.2f\n",
                s.p, s.q, c.objects.size(), serial, par,
                par > 0 ? serial / par : 0.0);
  }
  return 0;
}
