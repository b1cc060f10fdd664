// End-to-end checks of the domino-forge binary: exit codes, JSON shapes and
// cross-subcommand consistency. The binary path arrives as argv[1].

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

using json = nlohmann::json;

namespace {

std::string g_binary;
int g_failures = 0;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
  const std::string cmd =
      env + (env.empty() ? "" : " ") + "'" + g_binary + "' " + args +
      " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    std::cerr << "popen failed for: " << cmd << "\n";
    std::exit(2);
  }
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

void expect(bool ok, const std::string& what) {
  if (ok) {
    std::cout << "ok: " << what << "\n";
  } else {
    std::cout << "FAILED: " << what << "\n";
    ++g_failures;
  }
}

std::string first_line(const std::string& s) {
  return s.substr(0, s.find('\n'));
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_tests <domino-forge binary>\n";
    return 2;
  }
  g_binary = argv[1];

  // count: methods agree and report the right value
  {
    auto r = run("count 6 6 --method=kasteleyn");
    expect(r.exit_code == 0, "count kasteleyn exits 0");
    auto record = json::parse(first_line(r.out));
    expect(record["count"] == "6728", "count kasteleyn 6x6 is 6728");
    expect(record["rows"] == 6 && record["cols"] == 6 &&
               record["method"] == "kasteleyn" &&
               record.contains("elapsed_ns"),
           "count record shape");

    auto gf = json::parse(first_line(run("count 6 6 --method=gf").out));
    auto oracle =
        json::parse(first_line(run("count 6 6 --method=oracle").out));
    expect(gf["count"] == oracle["count"], "gf and oracle agree on 6x6");

    auto compact =
        json::parse(first_line(run("count 6 24 --method=compact").out));
    expect(compact["count"] == "29242880940226381",
           "compact 6x24 matches the table");

    auto rec20 =
        json::parse(first_line(run("count 6 40 --method=rec20").out));
    auto transfer =
        json::parse(first_line(run("count 6 40 --method=transfer").out));
    expect(rec20["count"] == transfer["count"],
           "rec20 and transfer agree on 6x40");
  }

  // exit codes
  expect(run("count 3 4 --method=kasteleyn").exit_code == 2,
         "odd board via kasteleyn exits 2");
  expect(run("count 4 4 --method=gf").exit_code == 2,
         "gf off the width-6 family exits 2");
  expect(run("count 6 10 --method=rec20").exit_code == 2,
         "rec20 below its seed horizon exits 2");
  expect(run("count 18 16 --method=oracle").exit_code == 2,
         "oracle beyond its area bound exits 2");
  expect(run("count 24 24 --method=kasteleyn --initial-bits=64 "
             "--max-bits=64")
                 .exit_code == 3,
         "starved precision exits 3");
  expect(run("count 6 6 --method=bogus").exit_code == 1,
         "unknown method exits 1");
  expect(run("").exit_code == 1, "missing subcommand exits 1");

  // sequence
  {
    auto r = run("sequence 17");
    expect(r.exit_code == 0, "sequence 17 exits 0");
    auto arr = json::parse(first_line(r.out));
    expect(arr.size() == 18 && arr[0] == "1" && arr[3] == "6728" &&
               arr[17] == "314771823879840325570888",
           "sequence 17 matches the table");
    auto zero = json::parse(first_line(run("sequence 0").out));
    expect(zero.size() == 1 && zero[0] == "1", "sequence 0 is [\"1\"]");
  }

  // bench
  {
    auto r = run("bench --n=64 --method=compact --method=rec7");
    expect(r.exit_code == 0, "bench exits 0");
    std::istringstream lines(r.out);
    std::string line;
    bool compact_ok = false, rec7_ok = false;
    while (std::getline(lines, line)) {
      auto record = json::parse(line);
      if (record["method"] == "compact")
        compact_ok = record["ops"].get<int>() <= 12 &&
                     record["ops_unit"] == "matrix_mults";
      if (record["method"] == "rec7")
        rec7_ok = record["ops"] == 58 &&
                  record["ops_unit"] == "recurrence_steps";
    }
    expect(compact_ok, "bench compact reports <= 2*log2(n) multiplications");
    expect(rec7_ok, "bench rec7 reports its 58 extension steps");
  }

  // enumerate
  {
    auto r = run("enumerate 2 2");
    expect(r.exit_code == 0, "enumerate exits 0");
    std::istringstream lines(r.out);
    std::string line;
    int n = 0;
    bool first_is_bricks = false;
    while (std::getline(lines, line)) {
      auto record = json::parse(line);
      if (n == 0) first_is_bricks = record["text"] == "AA\nBB\n";
      ++n;
    }
    expect(n == 2 && first_is_bricks, "enumerate 2 2 streams both covers");
    expect(run("enumerate 6 6 --cap=100").exit_code == 2,
           "enumerate past the cap exits 2");
  }

  // tiling-file subcommands
  const std::string dir = []() {
    const char* env = std::getenv("TMPDIR");
    return std::string(env ? env : "/tmp");
  }();
  const std::string brick2 = dir + "/domino_cli_2x2.txt";
  write_file(brick2, "AA\nBB\n");
  const std::string brick6 = dir + "/domino_cli_6x6.txt";
  write_file(brick6,
             "AABBCC\nDDEEFF\nGGHHII\nJJKKLL\nMMNNOO\nPPQQRR\n");
  const std::string malformed = dir + "/domino_cli_bad.txt";
  write_file(malformed, "AB\nBA\n");

  {
    auto r = run("faults " + brick2);
    expect(r.exit_code == 0 &&
               first_line(r.out) == "[{\"axis\":\"H\",\"index\":1}]",
           "faults on the 2x2 bricks");
    auto r6 = run("faults " + brick6);
    auto arr = json::parse(first_line(r6.out));
    expect(r6.exit_code == 0 && arr.size() == 7,
           "all-horizontal 6x6 has 5 horizontal + 2 vertical fault lines");
  }

  {
    auto r = run("hampath " + brick2 + " --variant A");
    auto arr = json::parse(first_line(r.out));
    expect(r.exit_code == 0 && arr.size() == 9 && arr[0][0] == 0 &&
               arr[0][1] == 0,
           "hampath on the 2x2 bricks yields 9 vertices");
    auto rb = run("hampath " + brick2 + " --variant B");
    auto arrb = json::parse(first_line(rb.out));
    expect(rb.exit_code == 0 && arrb.size() == 9 && arrb[0][0] == 2,
           "variant B starts bottom-right");
    expect(run("hampath " + brick6 + " --variant A --budget 3").exit_code ==
               5,
           "starved search budget exits 5");
    expect(run("hampath " + malformed + " --variant A").exit_code == 1,
           "malformed tiling file exits 1");
  }

  {
    auto r = run("render " + brick2);
    expect(r.exit_code == 0 && r.out == "AA\nBB\n",
           "render without flags prints the text form");
    const std::string svg_path = dir + "/domino_cli_2x2.svg";
    auto rs = run("render " + brick2 + " --svg " + svg_path +
                  " --variant A --show-faults");
    auto record = json::parse(first_line(rs.out));
    expect(rs.exit_code == 0 && record["svg"] == svg_path,
           "render writes the svg file");
    std::ifstream svg(svg_path, std::ios::binary);
    std::string head;
    std::getline(svg, head);
    expect(head.rfind("<?xml", 0) == 0, "svg file starts with a declaration");
  }

  // verify (scopes that run quickly)
  {
    auto r = run("verify matrix --fixture " DOMINO_FIXTURE_PATH);
    expect(r.exit_code == 0, "verify matrix exits 0");
    std::istringstream lines(r.out);
    std::string line;
    bool all_pass = true;
    int checks = 0;
    while (std::getline(lines, line)) {
      auto record = json::parse(line);
      all_pass = all_pass && record["status"] == "pass";
      ++checks;
    }
    expect(all_pass && checks >= 8, "verify matrix reports passing checks");
    expect(run("verify series").exit_code == 0, "verify series exits 0");
  }

  // worker override is honoured by the exhaustive suite
  {
    auto r = run("verify paths6x6", "DOMINO_FORGE_THREADS=2");
    expect(r.exit_code == 0, "verify paths6x6 exits 0");
    bool census_seen = false;
    std::istringstream lines(r.out);
    std::string line;
    while (std::getline(lines, line)) {
      auto record = json::parse(line);
      if (record["check"] == "path uniqueness census recorded")
        census_seen = record["detail"]["workers"] == 2;
    }
    expect(census_seen, "census reports the DOMINO_FORGE_THREADS override");
  }

  std::cout << (g_failures == 0 ? "all cli checks passed\n"
                                : "cli checks FAILED\n");
  return g_failures == 0 ? 0 : 1;
}
