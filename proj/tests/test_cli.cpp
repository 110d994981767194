// End-to-end checks of the command-line tool, driven through a shell.
// Takes the path to the dyck binary as its only argument.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

namespace {

int failures = 0;
std::string cli;

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout only, unless the command redirects
};

RunResult run(const std::string& command) {
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    std::cerr << "popen failed for: " << command << "\n";
    std::exit(2);
  }
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
    result.output.append(buffer, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

void expect(bool ok, const std::string& what) {
  if (ok) {
    std::cout << "ok: " << what << "\n";
  } else {
    std::cout << "FAILED: " << what << "\n";
    ++failures;
  }
}

void expect_run(const std::string& command, int exit_code,
                const std::string& exact_output) {
  const RunResult r = run(command);
  expect(r.exit_code == exit_code && r.output == exact_output,
         command + " -> exit " + std::to_string(r.exit_code));
  if (r.output != exact_output)
    std::cout << "  got: " << r.output << "  want: " << exact_output;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: test_cli <path-to-dyck-binary>\n";
    return 2;
  }
  cli = argv[1];

  // validate
  expect_run("printf 'xxxDDxDDxD' | " + cli + " validate", 0, "OK 5\n");
  expect_run("printf 'xD\\n' | " + cli + " validate", 0, "OK 1\n");
  expect_run("printf '' | " + cli + " validate", 0, "OK 0\n");
  {
    const RunResult r = run("printf 'xDD' | " + cli + " validate 2>/dev/null");
    expect(r.exit_code == 1 && r.output.empty(),
           "validate xDD: exit 1, stdout clean");
    const RunResult e = run("printf 'xDD' | " + cli + " validate 2>&1");
    expect(contains(e.output, "PrefixViolation at 3"),
           "validate xDD: diagnostic names the position");
  }

  // to-matrix / to-word on the worked example
  expect_run("printf 'xxxDDxDDxD' | " + cli + " to-matrix", 0,
             "11100\n10010\n00001\n");
  expect_run("printf 'xD' | " + cli + " to-matrix", 0, "1\n");
  expect_run("printf 'xxDxDD' | " + cli + " to-matrix", 0, "110\n101\n");
  expect_run("printf '11100\\n10010\\n00001\\n' | " + cli + " to-word", 0,
             "xxxDDxDDxD\n");
  expect_run("printf '1' | " + cli + " to-word", 0, "xD\n");
  {
    const RunResult r = run("printf '11100\\n10011\\n00001\\n' | " + cli +
                            " to-word 2>&1 >/dev/null");
    expect(r.exit_code == 1 && contains(r.output, "M2Violation"),
           "to-word rejects the near-miss grid");
  }

  // piping to-matrix into to-word is the identity
  expect_run("printf 'xxxDDxDDxD\\n' | " + cli + " to-matrix | " + cli +
                 " to-word",
             0, "xxxDDxDDxD\n");

  // to-digraph, word and matrix input
  {
    const RunResult r = run("printf 'xD' | " + cli + " to-digraph");
    expect(r.exit_code == 0 &&
               contains(r.output, "v1 -> v1 [label=\"e11\"]"),
           "to-digraph of xD is a single labelled loop");
    const RunResult m = run("printf '11100\\n10010\\n00001\\n' | " + cli +
                            " to-digraph");
    expect(m.exit_code == 0 && contains(m.output, "\"e31\"") &&
               contains(m.output, "v5;"),
           "to-digraph accepts matrix input");
    const RunResult w = run("printf 'xxDxDD' | " + cli + " to-digraph");
    expect(w.exit_code == 0 && contains(w.output, "v3") &&
               contains(w.output, "\"e22\""),
           "to-digraph of xxDxDD has 3 vertices, 4 edges");
  }

  // alphabet mapping; output stays canonical
  expect_run("printf '(())' | " + cli + " validate --alphabet '()'", 0,
             "OK 2\n");
  expect_run("printf 'NENE' | " + cli + " to-matrix --alphabet NE", 0,
             "10\n01\n");
  {
    const RunResult r =
        run("printf 'xx' | " + cli + " validate --alphabet xx 2>/dev/null");
    expect(r.exit_code == 2, "equal alphabet characters are a usage error");
  }

  // enumerate
  expect_run(cli + " enumerate --max-n 1", 0, "xD\n");
  expect_run(cli + " enumerate --max-n 3", 0,
             "xxxDDD\nxxDxDD\nxxDDxD\nxDxxDD\nxDxDxD\n");
  {
    const RunResult r = run(cli + " enumerate --max-n 13 2>/dev/null");
    expect(r.exit_code == 2, "enumerate beyond the safety limit is refused");
  }

  // roundtrip-check
  {
    const RunResult r = run(cli + " roundtrip-check --max-n 3");
    expect(r.exit_code == 0 && contains(r.output, "n=3: 5 words, pass") &&
               contains(r.output, "all checks passed (8 words)"),
           "roundtrip-check up to 3");
    const RunResult zero = run(cli + " roundtrip-check --max-n 0 2>/dev/null");
    expect(zero.exit_code == 2, "roundtrip-check needs a positive bound");
  }

  // usage errors
  {
    expect(run(cli + " no-such-command 2>/dev/null").exit_code == 2,
           "unknown subcommand is a usage error");
    expect(run(cli + " to-matrix --input /no/such/file 2>/dev/null")
                   .exit_code == 2,
           "missing input file is an I/O error");
  }

  // --input / --output files
  {
    const std::string dir = "/tmp/dyck_cli_test";
    run("mkdir -p " + dir);
    run("printf 'xDxD' > " + dir + "/word.txt");
    const RunResult r = run(cli + " to-matrix --input " + dir +
                            "/word.txt --output " + dir + "/matrix.txt" +
                            " && cat " + dir + "/matrix.txt");
    expect(r.exit_code == 0 && r.output == "10\n01\n",
           "file input and output");
  }

  std::cout << (failures == 0 ? "all cli checks passed\n"
                              : std::to_string(failures) + " failed\n");
  return failures == 0 ? 0 : 1;
}
