#include "msekr/family_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

#include "msekr/errors.hpp"

namespace msekr {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) {
    return {};
  }
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

int parse_int(int line, std::string_view token, std::string_view what) {
  int value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw parse_error(line, "bad " + std::string(what) + " '" +
                                std::string(token) + "'");
  }
  return value;
}

struct Header {
  int m = 0;
  int k = 0;
  FamilyKind kind = FamilyKind::multiset;
};

Header parse_header(int line, const std::string& text) {
  std::map<std::string, std::string> fields;
  std::istringstream ss(text);
  std::string token;
  while (ss >> token) {
    auto eq = token.find('=');
    if (eq == std::string::npos) {
      throw parse_error(line, "header token '" + token + "' is not key=value");
    }
    auto key = token.substr(0, eq);
    if (!fields.emplace(key, token.substr(eq + 1)).second) {
      throw parse_error(line, "repeated header key '" + key + "'");
    }
  }
  for (const char* key : {"m", "k", "kind"}) {
    if (!fields.contains(key)) {
      throw parse_error(line, std::string("header is missing '") + key + "='");
    }
  }
  if (fields.size() != 3) {
    throw parse_error(line, "unexpected header key");
  }
  Header h;
  h.m = parse_int(line, fields["m"], "m");
  h.k = parse_int(line, fields["k"], "k");
  if (h.m < 1 || h.k < 0) {
    throw parse_error(line, "header needs m >= 1 and k >= 0");
  }
  const std::string& kind = fields["kind"];
  if (kind == "set") {
    h.kind = FamilyKind::set;
  } else if (kind == "multiset") {
    h.kind = FamilyKind::multiset;
  } else {
    throw parse_error(line, "kind must be set or multiset, got '" + kind + "'");
  }
  return h;
}

}  // namespace

Family parse_family(std::istream& in) {
  std::string raw;
  int line = 0;
  bool have_header = false;
  Header header;
  std::vector<Multiset> members;
  std::map<Multiset, int> seen;
  while (std::getline(in, raw)) {
    ++line;
    std::string text = trim(raw);
    if (text.empty() || text.front() == '#') {
      continue;
    }
    if (!have_header) {
      header = parse_header(line, text);
      have_header = true;
      continue;
    }
    std::istringstream ss(text);
    std::vector<int> elems;
    std::string token;
    while (ss >> token) {
      int e = parse_int(line, token, "element");
      if (e < 1 || e > header.m) {
        throw parse_error(line, "element " + token + " outside [1," +
                                    std::to_string(header.m) + "]");
      }
      if (!elems.empty()) {
        bool ordered = header.kind == FamilyKind::set ? elems.back() < e
                                                      : elems.back() <= e;
        if (!ordered) {
          throw parse_error(line, header.kind == FamilyKind::set
                                      ? "set members must be strictly increasing"
                                      : "multiset members must be non-decreasing");
        }
      }
      elems.push_back(e);
    }
    if (static_cast<int>(elems.size()) != header.k) {
      throw parse_error(line, "expected " + std::to_string(header.k) +
                                  " elements, found " +
                                  std::to_string(elems.size()));
    }
    Multiset a = Multiset::from_elements(header.m, elems);
    auto [it, inserted] = seen.emplace(a, line);
    if (!inserted) {
      throw parse_error(line, "duplicate member (first seen on line " +
                                  std::to_string(it->second) + ")");
    }
    members.push_back(std::move(a));
  }
  if (!have_header) {
    throw parse_error(line, "missing header line");
  }
  return Family(header.m, header.k, header.kind, std::move(members));
}

Family parse_family(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_family(in);
}

Family read_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw contract_error("cannot open " + path);
  }
  return parse_family(in);
}

void write_family(std::ostream& out, const Family& family) {
  out << "m=" << family.ground_size() << " k=" << family.k()
      << " kind=" << to_string(family.kind()) << '\n';
  for (const Multiset& a : family) {
    bool first = true;
    for (int e : a.elements()) {
      if (!first) {
        out << ' ';
      }
      out << e;
      first = false;
    }
    out << '\n';
  }
}

std::string format_family(const Family& family) {
  std::ostringstream os;
  write_family(os, family);
  return os.str();
}

void write_family_file(const std::string& path, const Family& family) {
  std::ofstream out(path);
  if (!out) {
    throw contract_error("cannot write " + path);
  }
  write_family(out, family);
}

}  // namespace msekr
