#include <fstream>
#include <sstream>

#include "groupgraph/family.hpp"

namespace groupgraph {

namespace {

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw GroupError(GroupErrorKind::ParseError,
                   "line " + std::to_string(line) + ": " + what);
}

std::vector<long long> tokens_of(const std::string& line, std::size_t line_no) {
  std::vector<long long> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      parse_error(line_no, "not an integer: '" + tok + "'");
    }
    if (used != tok.size()) parse_error(line_no, "not an integer: '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

CayleyTable parse_cayley_table(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> n;
  CayleyTable rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto values = tokens_of(line, line_no);
    if (values.empty()) continue;
    if (!n) {
      if (values.size() != 1 || values[0] <= 0) {
        parse_error(line_no, "expected a single positive order on the first line");
      }
      n = static_cast<std::size_t>(values[0]);
      continue;
    }
    if (rows.size() == *n) parse_error(line_no, "more than n rows");
    if (values.size() != *n) {
      parse_error(line_no, "ragged row: " + std::to_string(values.size()) +
                               " entries, expected " + std::to_string(*n));
    }
    std::vector<Element> row;
    row.reserve(*n);
    for (long long v : values) {
      if (v < 0 || static_cast<std::size_t>(v) >= *n) {
        parse_error(line_no, "entry " + std::to_string(v) + " outside [0, " +
                                 std::to_string(*n) + ")");
      }
      row.push_back(static_cast<Element>(v));
    }
    rows.push_back(std::move(row));
  }
  if (!n) parse_error(line_no, "missing order line");
  if (rows.size() != *n) {
    parse_error(line_no, "expected " + std::to_string(*n) + " rows, found " +
                             std::to_string(rows.size()));
  }
  return rows;
}

CayleyTable read_cayley_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GroupError(GroupErrorKind::FileError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_cayley_table(buf.str());
  } catch (const GroupError& e) {
    throw GroupError(e.kind(), path + ": " + e.detail());
  }
}

std::string format_cayley_table(const FiniteGroup& g) {
  std::ostringstream os;
  os << "# " << g.label() << "\n" << g.order() << "\n";
  for (Element i = 0; i < g.order(); ++i) {
    for (Element j = 0; j < g.order(); ++j) {
      if (j) os << ' ';
      os << g.multiply(i, j);
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace groupgraph
