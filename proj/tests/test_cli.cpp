// Shell-level checks of the CLI: pinned output lines, spec round-trips,
// exit codes, and byte-identical output across thread counts. The binary
// path arrives in $RECGCD_CLI (set by CTest).

#include <array>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

namespace {

int failures = 0;

struct RunResult {
  int code;
  std::string out;
};

RunResult run(const std::string& args) {
  const char* cli = std::getenv("RECGCD_CLI");
  if (!cli) {
    std::cerr << "RECGCD_CLI not set\n";
    std::exit(2);
  }
  std::string cmd = std::string(cli) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) std::exit(2);
  while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

void expect(const std::string& args, int code, const std::string& out_exact) {
  auto r = run(args);
  if (r.code != code || r.out != out_exact) {
    ++failures;
    std::cerr << "FAIL: recgcd " << args << "\n  want code " << code << " output \"" << out_exact
              << "\"\n  got  code " << r.code << " output \"" << r.out << "\"\n";
  }
}

void expect_code(const std::string& args, int code) {
  auto r = run(args);
  if (r.code != code) {
    ++failures;
    std::cerr << "FAIL: recgcd " << args << "\n  want code " << code << ", got " << r.code << "\n";
  }
}

}  // namespace

int main() {
  expect("zrank --fib --m 10", 0, "15\n");
  expect("zrank --fib --m 10 --brute", 0, "15\n");
  expect("nonempty --fib --h 3", 0, "false (l=12, gcd=12)\n");
  expect("nonempty --fib --h 2", 0, "true (l=6, gcd=2)\n");
  expect("eval --fib --n 12", 0, "144\n");
  expect("eval --rec \"1; 5; 1\" --n 4", 0, "625\n");
  expect("eval-mod --fib --n 1000000000 --m 10", 0, "5\n");
  expect("period --fib --m 10", 0, "0 60\n");
  expect("fixed-divisor --poly \"1; 0,1,1\"", 0, "2\n");
  expect("fixed-divisor --poly \"2; 2,9,9\"", 0, "1\n");
  expect("fixed-divisor --poly \"2; 6,15,9\"", 0, "3\n");
  expect("rho --poly \"1; 0,1,1\" --p 2", 0, "2/1\n");
  expect("rho --poly \"1; 0,1\" --p 6", 0, "1/1\n");   // multiplicative: rho(2) rho(3)
  expect("rho --poly \"1; 0,1\" --p 4", 0, "0 (rho is supported on squarefree arguments)\n");
  expect("splits --poly \"1; 1,0,1\"", 0, "false\n");
  expect("tfp --fib --p 7", 0, "7, 7, 2, -\n");
  expect("tfp --fib --p 5", 0, "5, 0, 1, repeated_roots\n");
  expect("tfp --rec \"1; 5; 1\" --p 7", 0, "7, inf, 1, -\n");
  expect("congruence-count --fib --p 7 --ell 0 --x 700", 0, "88\n");
  expect("delta-y --fib --poly \"1; 0,1\" --y 2", 0, "1/6 = 0.166666667\n");
  expect("tfp-census --fib --gamma 0.3333 --x 12", 0,
         "2, 2, 2, -\n3, >=3, 2, -\n5, 0, 1, repeated_roots\n7, >=3, 2, -\n11, >=4, 1, -\n"
         "count 1\nmembers: 5\nflagged: 5(repeated_roots)\n");

  // spec round-trips: parse -> print -> parse is the identity
  {
    auto first = run("decompose --rec \"2;  1, 1;  0, 1\"");
    auto second = run("decompose --rec \"2; 1,1; 0,1\"");
    if (first.out != second.out || first.code != 0) {
      ++failures;
      std::cerr << "FAIL: canonical spec round-trip\n" << first.out << second.out;
    }
  }

  // exit codes: 2 for usage, 1 for violated preconditions
  expect_code("frobnicate", 2);
  expect_code("zrank --fib", 2);               // missing required --m
  expect_code("zrank --fib --m 10 --bogus 1", 2);
  expect_code("eval --rec \"2; 1,0; 0,1\" --n 3", 1);     // a_k = 0
  expect_code("zrank --lucas \"2,2\" --m 7", 1);          // gcd(a1,a2) != 1
  expect_code("ailon-rudnick --a 2 --b 4 --x 5", 1);      // dependent bases
  expect_code("tfp --rec \"2; 5,-6; 0,1\" --p 2", 1);     // p | a_k
  expect_code("--help", 0);
  expect_code("density --help", 0);

  // the no-spaces spec form parses too, and the full record is pinned
  {
    auto r = run("density --rec \"2;1,1;0,1\" --poly \"1;0,1\" --h 1 --x 1000000 --y 50 "
                 "--threads 2");
    if (r.code != 0 ||
        r.out.substr(0, r.out.find('\n')) !=
            "1000000, 641878, 0.641878000, 50, 0.354731003, 0.003390997, 0") {
      ++failures;
      std::cerr << "FAIL: pinned density record\n" << r.out;
    }
  }

  // determinism: identical argv + seed => byte-identical output, any threads
  {
    std::string base = "density --fib --poly \"1; 0,1\" --h 1 --x 100000 --y 13";
    auto a = run(base + " --threads 1");
    auto b = run(base + " --threads 4");
    auto c = run(base + " --threads 1");
    if (a.out != b.out || a.out != c.out || a.code != 0) {
      ++failures;
      std::cerr << "FAIL: threaded determinism\n" << a.out << b.out;
    }
  }
  {
    auto a = run("large-prime-census --fib --poly \"1; 1,0,1\" --x 300 --seed 3");
    auto b = run("large-prime-census --fib --poly \"1; 1,0,1\" --x 300 --seed 3");
    if (a.out != b.out || a.code != 0) {
      ++failures;
      std::cerr << "FAIL: census determinism\n" << a.out << b.out;
    }
  }

  // CSV emission: header once, then records
  {
    std::string path = "cli_test_out.csv";
    std::remove(path.c_str());
    run("report --fib --poly \"1; 0,1\" --h 1 --x 1000 --y 5 --csv " + path);
    run("report --fib --poly \"1; 0,1\" --h 1 --x 2000 --y 5 --csv " + path);
    FILE* f = fopen(path.c_str(), "r");
    if (!f) {
      ++failures;
      std::cerr << "FAIL: CSV file missing\n";
    } else {
      std::array<char, 256> line{};
      int rows = 0;
      std::string header;
      while (fgets(line.data(), line.size(), f)) {
        if (rows == 0) header = line.data();
        ++rows;
      }
      fclose(f);
      if (rows != 3 || header != "x, count, density, y, delta_y, gap, estimated_flag\n") {
        ++failures;
        std::cerr << "FAIL: CSV contents (rows=" << rows << ")\n";
      }
    }
    std::remove(path.c_str());
  }

  // z-cache: a second run reuses the file written by the first
  {
    std::string path = "cli_test_zcache.txt";
    std::remove(path.c_str());
    expect("zrank --fib --m 4181 --cache " + path, 0, "19\n");  // 4181 = F(19) = 37*113
    expect("zrank --fib --m 4181 --cache " + path, 0, "19\n");
    FILE* f = fopen(path.c_str(), "r");
    if (!f) {
      ++failures;
      std::cerr << "FAIL: z-cache file missing\n";
    } else {
      fclose(f);
    }
    std::remove(path.c_str());
  }

  if (failures) {
    std::cerr << failures << " CLI check(s) failed\n";
    return 1;
  }
  std::cout << "all CLI checks passed\n";
  return 0;
}
