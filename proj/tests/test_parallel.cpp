#include <doctest.h>

#include <cstdlib>
#include <string>

#include "excol/parallel.hpp"

using namespace excol;

TEST_CASE("parallel map agrees with the serial reference") {
  const auto fn = [](std::size_t i) {
    long v = static_cast<long>(i);
    return v * v - 3 * v + 1;
  };
  const auto serial = parallel_map<long>(1000, fn, ExecPolicy::serial);
  const auto par = parallel_map<long>(1000, fn, ExecPolicy::parallel);
  REQUIRE(serial.size() == 1000);
  CHECK(serial == par);
  CHECK(serial[0] == 1);
  CHECK(serial[999] == 999L * 999 - 3 * 999 + 1);
}

TEST_CASE("parallel map keeps index order for non-trivial payloads") {
  const auto fn = [](std::size_t i) { return "item-" + std::to_string(i); };
  const auto serial = parallel_map<std::string>(257, fn, ExecPolicy::serial);
  const auto par = parallel_map<std::string>(257, fn, ExecPolicy::parallel);
  CHECK(serial == par);
  CHECK(par[42] == "item-42");
}

TEST_CASE("empty range maps to empty output") {
  const auto fn = [](std::size_t) { return 7; };
  CHECK(parallel_map<int>(0, fn, ExecPolicy::serial).empty());
  CHECK(parallel_map<int>(0, fn, ExecPolicy::parallel).empty());
}

TEST_CASE("thread environment variable forces the serial policy") {
  setenv("EXCOL_THREADS", "1", 1);
  CHECK(default_policy() == ExecPolicy::serial);
  unsetenv("EXCOL_THREADS");
  CHECK(hardware_threads() >= 1);
}
