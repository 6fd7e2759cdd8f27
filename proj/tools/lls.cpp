#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lls/lls.hpp"

namespace {

std::vector<lls::Letter> parse_alphabet(const std::string& text) {
  std::vector<lls::Letter> letters;
  if (text.find(',') != std::string::npos) {
    std::string cur;
    for (char ch : text) {
      if (ch == ',') {
        letters.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    letters.push_back(cur);
  } else {
    for (char ch : text) {
      letters.emplace_back(1, ch);
    }
  }
  return letters;
}

std::string checked_identity(const std::string& text) {
  try {
    lls::Identity::parse(text);
  } catch (const std::exception& e) {
    return std::string("bad identity \"") + text + "\": " + e.what();
  }
  return {};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"left legal semigroups: free-object normal forms and finite "
               "Cayley table analysis"};
  app.require_subcommand(1);

  std::string word1, word2, letters, file;
  int order = 0, max_letters = 4, congruence_bound = 8;
  bool left_legal = false, up_to_iso = false;
  std::vector<std::string> identity_texts;

  auto* normalize = app.add_subcommand(
      "normalize", "print the normal form of a word");
  normalize->add_option("word", word1, "word, e.g. xyxzx or \"ab cd ab\"")
      ->required();
  normalize->callback([&] {
    std::cout << lls::normalize(lls::Word::parse(word1)).str() << '\n';
  });

  auto* mult = app.add_subcommand(
      "mult", "multiply two words in the free left legal semigroup");
  mult->add_option("word1", word1, "left factor")->required();
  mult->add_option("word2", word2, "right factor")->required();
  mult->callback([&] {
    std::cout << lls::circ(lls::normalize(lls::Word::parse(word1)),
                           lls::normalize(lls::Word::parse(word2)))
                     .str()
              << '\n';
  });

  auto* equiv = app.add_subcommand(
      "equiv", "decide the word problem modulo aba=ab");
  equiv->add_option("word1", word1, "first word")->required();
  equiv->add_option("word2", word2, "second word")->required();
  equiv->callback([&] {
    bool eq = lls::are_equivalent(lls::Word::parse(word1),
                                  lls::Word::parse(word2));
    std::cout << (eq ? "true" : "false") << '\n';
  });

  auto* free_table = app.add_subcommand(
      "free-table", "emit the Cayley table of the free left legal semigroup");
  free_table
      ->add_option("--letters", letters,
                   "alphabet: single characters packed (xy), or "
                   "comma-separated tokens (ab,cd)")
      ->required();
  free_table->add_option("--max-letters", max_letters,
                         "alphabet size bound (default 4)");
  free_table->callback([&] {
    std::cout << lls::free_semigroup(parse_alphabet(letters),
                                     static_cast<std::size_t>(max_letters))
                     .table.to_text();
  });

  auto* analyze = app.add_subcommand(
      "analyze", "full structural report for a Cayley table file");
  analyze->add_option("file", file, "table file")->required();
  analyze->add_option("--congruence-bound", congruence_bound,
                      "largest order for congruence-based fields (default 8)");
  analyze->callback([&] {
    lls::AnalysisOptions opt;
    opt.congruence_bound = congruence_bound;
    std::cout << lls::analyze(lls::CayleyTable::load(file), opt).to_text();
  });

  auto* enumerate = app.add_subcommand(
      "enumerate", "census of all semigroups of one order");
  enumerate->add_option("--order", order, "semigroup order")->required();
  enumerate
      ->add_option("--identity", identity_texts,
                   "extra identity filter, e.g. aba=ab (repeatable)")
      ->check(CLI::Validator(checked_identity, "IDENTITY"));
  enumerate->add_flag("--left-legal", left_legal, "keep aba=ab tables only");
  enumerate->add_flag("--up-to-iso", up_to_iso,
                      "keep canonical representatives only");
  enumerate->callback([&] {
    lls::EnumerationOptions options;
    for (const auto& text : identity_texts) {
      options.identities.push_back(lls::Identity::parse(text));
    }
    options.left_legal = left_legal;
    options.up_to_iso = up_to_iso;
    std::cout << lls::census_text(lls::enumerate_semigroups(order, options));
  });

  auto* congruences = app.add_subcommand(
      "congruences", "all congruences of a Cayley table file");
  congruences->add_option("file", file, "table file")->required();
  congruences->add_option("--max-order", congruence_bound,
                          "enumeration bound (default 8)");
  congruences->callback([&] {
    lls::CayleyTable t = lls::CayleyTable::load(file);
    auto found = lls::enumerate_congruences(t, congruence_bound);
    std::cout << "# count: " << found.size() << '\n';
    for (const auto& c : found) {
      std::cout << c.partition().str(t.names()) << '\n';
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const lls::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
