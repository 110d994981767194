// dyck — command-line front end for the word/matrix/digraph bijection.
//
// Subcommands: validate, to-matrix, to-word, to-digraph, enumerate,
// roundtrip-check. Payload goes to stdout (or --output), diagnostics to
// stderr. Exit codes: 0 success, 1 domain error, 2 usage or I/O error.

#include <cctype>
#include <fstream>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "dyck/dyck.hpp"

namespace {

constexpr std::size_t kMaxSemilength = 12;  // C_12 = 208012 words

struct IoError {
  std::string message;
};

std::string read_all(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Strips a single trailing newline; everything else is passed through.
std::string strip_newline(std::string text) {
  if (!text.empty() && text.back() == '\n') text.pop_back();
  return text;
}

class Input {
 public:
  explicit Input(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw IoError{"cannot open input file: " + path};
    }
  }
  std::istream& stream() { return file_.is_open() ? file_ : std::cin; }

 private:
  std::ifstream file_;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw IoError{"cannot open output file: " + path};
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

dyck::Alphabet make_alphabet(const std::string& arg) {
  if (arg.empty()) return {};
  if (arg.size() != 2 || arg[0] == arg[1] ||
      !std::isprint(static_cast<unsigned char>(arg[0])) ||
      !std::isprint(static_cast<unsigned char>(arg[1])))
    throw IoError{"--alphabet needs two distinct printable characters"};
  return dyck::Alphabet{arg[0], arg[1]};
}

int cmd_validate(Input& in, const dyck::Alphabet& alphabet) {
  const dyck::DyckWord word =
      dyck::parse_word(strip_newline(read_all(in.stream())), alphabet);
  std::cout << "OK " << word.semilength() << "\n";
  return 0;
}

int cmd_to_matrix(Input& in, Output& out, const dyck::Alphabet& alphabet) {
  const dyck::DyckMatrix m = dyck::get_matrix(in.stream(), alphabet);
  out.stream() << m.text();
  return 0;
}

int cmd_to_word(Input& in, Output& out) {
  const dyck::DyckMatrix m = dyck::parse_matrix_text(read_all(in.stream()));
  out.stream() << dyck::get_dyck_word(m).str() << "\n";
  return 0;
}

int cmd_to_digraph(Input& in, Output& out, const dyck::Alphabet& alphabet) {
  const std::string text = strip_newline(read_all(in.stream()));

  // A multi-line payload is a matrix. A single line is a word when every
  // character maps through the alphabet, else a matrix when it looks
  // binary; anything else is reported as a word error.
  bool matrix_input = text.find('\n') != std::string::npos;
  if (!matrix_input) {
    bool all_word = true;
    bool all_binary = true;
    for (char c : text) {
      if (!alphabet.to_symbol(c)) all_word = false;
      if (c != '0' && c != '1' && c != ' ') all_binary = false;
    }
    matrix_input = !text.empty() && !all_word && all_binary;
  }

  dyck::DyckMatrix m =
      matrix_input ? dyck::parse_matrix_text(text)
                   : dyck::get_matrix(dyck::parse_word(text, alphabet));
  out.stream() << dyck::to_dot(dyck::matrix_to_digraph(m));
  return 0;
}

int cmd_enumerate(Output& out, std::size_t semilength) {
  dyck::WordEnumerator en(semilength);
  while (auto word = en.next()) out.stream() << word->str() << "\n";
  return 0;
}

int cmd_roundtrip_check(std::size_t bound) {
  std::size_t total = 0;
  for (std::size_t n = 1; n <= bound; ++n) {
    std::size_t count = 0;
    std::set<std::string> distinct;
    dyck::WordEnumerator en(n);
    while (auto word = en.next()) {
      ++count;
      const dyck::DyckMatrix m = dyck::get_matrix(*word);
      distinct.insert(m.text());

      const auto fail = [&](const std::string& check) {
        std::cerr << "counterexample at n=" << n << ", word " << word->str()
                  << ": " << check << " failed\n";
        return 1;
      };
      if (dyck::get_dyck_word(m) != *word) return fail("word roundtrip");
      if (dyck::get_matrix(dyck::get_dyck_word(m)) != m)
        return fail("matrix roundtrip");
      if (!dyck::column_structure_check(m)) return fail("column structure");
      const dyck::EulerianDigraph g = dyck::matrix_to_digraph(m);
      if (!dyck::verify_family(g).ok()) return fail("family conditions E1/E2");
      if (!dyck::degree_balanced(g)) return fail("degree balance");
      if (dyck::digraph_to_matrix(g) != m) return fail("digraph roundtrip");
    }
    if (distinct.size() != count) {
      std::cerr << "counterexample at n=" << n
                << ": duplicate matrices, injectivity failed\n";
      return 1;
    }
    total += count;
    std::cout << "n=" << n << ": " << count << (count == 1 ? " word" : " words")
              << ", pass\n";
  }
  std::cout << "all checks passed (" << total << " words)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dyck words, Dyck matrices, and Eulerian digraphs"};
  app.require_subcommand(1);

  std::string input_path;
  std::string output_path;
  std::string alphabet_arg;
  std::size_t max_n = 0;

  auto add_io = [&](CLI::App* cmd, bool with_output = true) {
    cmd->add_option("--input", input_path, "read from a file instead of stdin");
    if (with_output)
      cmd->add_option("--output", output_path,
                      "write to a file instead of stdout");
  };
  auto add_alphabet = [&](CLI::App* cmd) {
    cmd->add_option("--alphabet", alphabet_arg,
                    "two characters mapped to x and D (default xD)");
  };

  CLI::App* validate = app.add_subcommand("validate", "check a word");
  add_io(validate, false);
  add_alphabet(validate);

  CLI::App* to_matrix =
      app.add_subcommand("to-matrix", "convert a word to its Dyck matrix");
  add_io(to_matrix);
  add_alphabet(to_matrix);

  CLI::App* to_word =
      app.add_subcommand("to-word", "convert a Dyck matrix to its word");
  add_io(to_word);

  CLI::App* to_digraph = app.add_subcommand(
      "to-digraph", "emit the Eulerian digraph of a word or matrix as DOT");
  add_io(to_digraph);
  add_alphabet(to_digraph);

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "list all Dyck words of one semilength");
  enumerate
      ->add_option("--max-n", max_n, "semilength to enumerate (at most 12)")
      ->required();
  enumerate->add_option("--output", output_path,
                        "write to a file instead of stdout");

  CLI::App* roundtrip = app.add_subcommand(
      "roundtrip-check",
      "verify both conversions and all invariants up to a semilength");
  roundtrip
      ->add_option("--max-n", max_n, "largest semilength to verify (1..12)")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
      return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    const dyck::Alphabet alphabet = make_alphabet(alphabet_arg);
    if (max_n > kMaxSemilength) throw IoError{"--max-n is capped at 12"};

    Input in(input_path);
    Output out(output_path);
    if (validate->parsed()) return cmd_validate(in, alphabet);
    if (to_matrix->parsed()) return cmd_to_matrix(in, out, alphabet);
    if (to_word->parsed()) return cmd_to_word(in, out);
    if (to_digraph->parsed()) return cmd_to_digraph(in, out, alphabet);
    if (enumerate->parsed()) return cmd_enumerate(out, max_n);
    if (roundtrip->parsed()) {
      if (max_n == 0) throw IoError{"--max-n must be at least 1"};
      return cmd_roundtrip_check(max_n);
    }
    return 2;
  } catch (const dyck::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.message << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
