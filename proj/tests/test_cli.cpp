#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <thread>

namespace {

struct Run {
  int rc = -1;
  std::string out;
};

Run run(const std::string& args) {
  Run r;
  const std::string cmd = std::string(PIRLAB_BIN) + " " + args + " 2>&1";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
  const int status = ::pclose(pipe);
  r.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

// Value column of a "  key   value" table line.
std::string value_of(const std::string& table, const std::string& key) {
  std::istringstream in(table);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string k, v;
    ls >> k;
    if (k != key) continue;
    std::getline(ls >> std::ws, v);
    return v;
  }
  return {};
}

const std::filesystem::path kDir = std::filesystem::temp_directory_path() / "pirlab_cli_test";

}  // namespace

TEST_CASE("params") {
  const auto r = run("params cgks --n 8");
  CHECK(r.rc == 0);
  CHECK(value_of(r.out, "comm_bits") == "26");
  const auto e = run("params efremenko --m 6 --p 7 --n 4");
  CHECK(e.rc == 0);
  CHECK(value_of(e.out, "k") == "4");
  const auto kr = run("params kr --r 104");
  CHECK(kr.rc == 0);
  CHECK(contains(kr.out, "8614775852302231065242988"));
  CHECK(run("params nosuch").rc == 2);
  CHECK(run("params cgks --n banana").rc == 2);
  CHECK(run("frobnicate").rc == 2);
}

TEST_CASE("verify exit codes") {
  const auto ok = run("verify lagrange --n 3 --t 1 --k 3 --p 5");
  CHECK(ok.rc == 0);
  CHECK(contains(ok.out, "verdict PASS"));
  const auto bad = run("verify broken-demo");
  CHECK(bad.rc == 1);
  CHECK(contains(bad.out, "FAIL"));
  CHECK(run("verify toy-f3 --suite privacy").rc == 0);
  CHECK(run("verify cgks --n 27 --suite correctness --unit-basis").rc == 0);
  CHECK(run("verify toy-f3 --suite nosuch").rc == 2);
}

TEST_CASE("config file with flag override") {
  std::filesystem::create_directories(kDir);
  const auto cfg = (kDir / "lag.cfg").string();
  std::ofstream(cfg) << "# lagrange settings\nprotocol = lagrange\nn = 3\nt = 1\nk = 3\np = 5\n";
  const auto r = run("params --config " + cfg);
  CHECK(r.rc == 0);
  CHECK(contains(r.out, "lagrange"));
  const auto o = run("params --config " + cfg + " --p 7");
  CHECK(o.rc == 0);
  CHECK(contains(o.out, "F_7"));
  CHECK(run("params --config " + (kDir / "missing.cfg").string()).rc == 2);
}

TEST_CASE("report file output is deterministic") {
  std::filesystem::create_directories(kDir);
  const auto a = (kDir / "a.txt").string(), b = (kDir / "b.txt").string();
  CHECK(run("verify toy-f3 --suite correctness --out " + a).rc == 0);
  CHECK(run("verify toy-f3 --suite correctness --out " + b).rc == 0);
  std::ifstream fa(a), fb(b);
  const std::string sa((std::istreambuf_iterator<char>(fa)), {}), sb((std::istreambuf_iterator<char>(fb)), {});
  CHECK(!sa.empty());
  CHECK(sa == sb);
}

TEST_CASE("gen-db, serve and get over loopback") {
  std::filesystem::create_directories(kDir);
  const auto db = (kDir / "x.db").string();
  const auto g = run("gen-db --n 8 --seed 3 --out " + db);
  REQUIRE(g.rc == 0);
  const std::string bits = g.out.substr(0, 8);
  CHECK(std::filesystem::file_size(db) == 9);

  const int base = 40000 + static_cast<int>(::getpid() % 20000);
  const std::string p1 = std::to_string(base), p2 = std::to_string(base + 1);
  const std::string srv = std::string(PIRLAB_BIN) + " serve --protocol cgks --n 8 --db " + db;
  (void)!std::system((srv + " --id 1 --port " + p1 + " >/dev/null 2>&1 & echo $! > " + (kDir / "s1.pid").string()).c_str());
  (void)!std::system((srv + " --id 2 --port " + p2 + " >/dev/null 2>&1 & echo $! > " + (kDir / "s2.pid").string()).c_str());
  std::this_thread::sleep_for(std::chrono::milliseconds(300));

  const std::string servers = " --servers :" + p1 + ",:" + p2;
  for (int i = 1; i <= 8; ++i) {
    const auto r = run("get --protocol cgks --n 8 --index " + std::to_string(i) + servers + " --seed " +
                       std::to_string(i));
    CHECK(r.rc == 0);
    CHECK(contains(r.out, "x_" + std::to_string(i) + " = " + bits[i - 1]));
  }
  CHECK(run("get --protocol cgks --n 27 --index 1" + servers).rc == 3);
  CHECK(run("get --protocol cgks --n 8 --index 1 --servers :" + p1).rc == 2);

  for (const char* f : {"s1.pid", "s2.pid"}) {
    std::ifstream in(kDir / f);
    int pid = 0;
    in >> pid;
    if (pid > 0) (void)!std::system(("kill " + std::to_string(pid)).c_str());
  }
  std::this_thread::sleep_for(std::chrono::milliseconds(100));
  CHECK(run("get --protocol cgks --n 8 --index 1 --timeout-ms 300" + servers).rc == 3);
  std::filesystem::remove_all(kDir);
}

TEST_CASE("bench") {
  const auto r = run("bench --protocol cgks --n 1,8 --trials 2");
  CHECK(r.rc == 0);
  CHECK(contains(r.out, "12h+2"));
}
