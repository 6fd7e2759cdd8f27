#include "lls/cayley_table.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "lls/error.hpp"

namespace lls {

namespace {

void validate(const std::vector<std::string>& names,
              const std::vector<int>& table) {
  int n = static_cast<int>(names.size());
  if (n < 1) {
    throw std::invalid_argument("a table needs at least one element");
  }
  if (table.size() != static_cast<std::size_t>(n) * n) {
    throw std::invalid_argument("table size does not match the element count");
  }
  for (int v : table) {
    if (v < 0 || v >= n) {
      throw std::invalid_argument("table entry " + std::to_string(v) +
                                  " out of range");
    }
  }
  for (const auto& name : names) {
    if (name.empty() ||
        name.find_first_of(" \t\r\n\f\v") != std::string::npos) {
      throw std::invalid_argument("element names must be nonempty and free of "
                                  "whitespace");
    }
  }
}

std::vector<int> flatten(const std::vector<std::vector<int>>& rows) {
  std::vector<int> flat;
  for (const auto& row : rows) {
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return flat;
}

//! Reads content lines, skipping blanks and '#' comments.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string& out) {
    std::string line;
    while (std::getline(in_, line)) {
      ++lineno_;
      std::size_t start = line.find_first_not_of(" \t\r");
      if (start == std::string::npos || line[start] == '#') {
        continue;
      }
      out = line;
      return true;
    }
    return false;
  }

  int lineno() const noexcept {
    return lineno_;
  }

 private:
  std::istream& in_;
  int lineno_ = 0;
};

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) {
    out.push_back(tok);
  }
  return out;
}

}  // namespace

CayleyTable::CayleyTable(std::vector<std::string> names, std::vector<int> flat)
    : order_(static_cast<int>(names.size())),
      names_(std::move(names)),
      table_(std::move(flat)) {
  validate(names_, table_);
  init_index();
}

CayleyTable::CayleyTable(std::vector<std::string> names,
                         const std::vector<std::vector<int>>& rows)
    : CayleyTable(std::move(names), flatten(rows)) {}

void CayleyTable::init_index() {
  for (int i = 0; i < order_; ++i) {
    if (!index_.emplace(names_[i], i).second) {
      throw std::invalid_argument("duplicate element name \"" + names_[i] +
                                  "\"");
    }
  }
}

std::vector<std::string> CayleyTable::default_names(int n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 0; i < n; ++i) {
    if (n <= 26) {
      names.emplace_back(1, static_cast<char>('a' + i));
    } else {
      names.push_back("x" + std::to_string(i));
    }
  }
  return names;
}

int CayleyTable::power(int a, int k) const {
  int acc = a;
  for (int i = 1; i < k; ++i) {
    acc = product(acc, a);
  }
  return acc;
}

int CayleyTable::eval(std::span<const int> factors) const {
  int acc = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i) {
    acc = product(acc, factors[i]);
  }
  return acc;
}

int CayleyTable::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  return it == index_.end() ? -1 : it->second;
}

std::optional<CayleyTable::Triple> CayleyTable::associativity_witness() const {
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) {
      int ab = product(a, b);
      for (int c = 0; c < order_; ++c) {
        if (product(ab, c) != product(a, product(b, c))) {
          return Triple{a, b, c};
        }
      }
    }
  }
  return std::nullopt;
}

void CayleyTable::require_associative() const {
  if (auto w = associativity_witness()) {
    throw PreconditionError("not associative: (" + names_[w->a] + "*" +
                            names_[w->b] + ")*" + names_[w->c] + " != " +
                            names_[w->a] + "*(" + names_[w->b] + "*" +
                            names_[w->c] + ")");
  }
}

CayleyTable CayleyTable::parse(std::istream& in) {
  LineReader reader(in);
  std::string line;
  if (!reader.next(line)) {
    throw ParseError(reader.lineno(), "missing table");
  }

  std::vector<std::string> names;
  bool have_names = false;
  if (auto toks = split_ws(line); toks[0] == "elements:") {
    names.assign(toks.begin() + 1, toks.end());
    have_names = true;
    if (!reader.next(line)) {
      throw ParseError(reader.lineno(), "missing order after elements: line");
    }
  }

  auto order_toks = split_ws(line);
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(order_toks[0], &used);
    if (used != order_toks[0].size() || order_toks.size() != 1) {
      throw std::invalid_argument("");
    }
  } catch (const std::exception&) {
    throw ParseError(reader.lineno(),
                     "expected the table order, got \"" + line + "\"");
  }
  if (n < 1) {
    throw ParseError(reader.lineno(), "table order must be at least 1");
  }
  if (have_names && static_cast<int>(names.size()) != n) {
    throw ParseError(reader.lineno(),
                     "elements: line names " + std::to_string(names.size()) +
                         " elements but the order is " + std::to_string(n));
  }
  if (!have_names) {
    names = default_names(n);
  }

  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r) {
    if (!reader.next(line)) {
      throw ParseError(reader.lineno(), "missing row " + std::to_string(r) +
                                            " of " + std::to_string(n));
    }
    auto toks = split_ws(line);
    if (static_cast<int>(toks.size()) != n) {
      throw ParseError(reader.lineno(),
                       "row has " + std::to_string(toks.size()) +
                           " entries, expected " + std::to_string(n));
    }
    for (const auto& tok : toks) {
      int v = -1;
      try {
        std::size_t used = 0;
        v = std::stoi(tok, &used);
        if (used != tok.size()) {
          throw std::invalid_argument("");
        }
      } catch (const std::exception&) {
        throw ParseError(reader.lineno(), "bad table entry \"" + tok + "\"");
      }
      if (v < 0 || v >= n) {
        throw ParseError(reader.lineno(),
                         "entry " + std::to_string(v) + " out of range [0, " +
                             std::to_string(n) + ")");
      }
      flat.push_back(v);
    }
  }

  try {
    return CayleyTable(std::move(names), std::move(flat));
  } catch (const std::invalid_argument& e) {
    throw ParseError(reader.lineno(), e.what());
  }
}

CayleyTable CayleyTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error("cannot open \"" + path + "\"");
  }
  CayleyTable t = parse(in);
  LineReader rest(in);
  std::string extra;
  if (rest.next(extra)) {
    throw ParseError(rest.lineno(), "unexpected content after the table");
  }
  return t;
}

std::string CayleyTable::to_text() const {
  std::string out = "elements:";
  for (const auto& name : names_) {
    out += ' ';
    out += name;
  }
  out += '\n';
  out += std::to_string(order_);
  out += '\n';
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) {
      if (b > 0) {
        out += ' ';
      }
      out += std::to_string(product(a, b));
    }
    out += '\n';
  }
  return out;
}

}  // namespace lls
