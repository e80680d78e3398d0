#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(MSEKR_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe) != nullptr) out += buf.data();
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string tmp(const std::string& name) {
  return std::string(MSEKR_TMP) + "/cli_" + name;
}

void write(const std::string& path, const std::string& text) {
  std::ofstream(path) << text;
}

std::string read(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int lines(const std::string& text) {
  int n = 0;
  for (char c : text)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("size") {
  auto r = run("size --family frankl_multiset --m 5 --k 4 --t 2 --r 1");
  CHECK(r.code == 0);
  CHECK(r.out.find("17") != std::string::npos);
  CHECK(run("size --family hm_multiset --m 3 --k 3").code == 2);
}

TEST_CASE("construct and isomorphic") {
  auto a = tmp("star1.txt");
  auto b = tmp("star2.txt");
  auto c = tmp("hm.txt");
  auto d = tmp("frankl.txt");
  REQUIRE(run("construct --family star --m 4 --k 3 --x 1 -o " + a).code == 0);
  REQUIRE(run("construct --family star --m 4 --k 3 --x 2 -o " + b).code == 0);
  CHECK(read(a).rfind("m=4 k=3 kind=multiset", 0) == 0);
  CHECK(lines(read(a)) == 11);
  CHECK(run("isomorphic " + a + " " + b).code == 0);

  REQUIRE(run("construct --family hm_multiset --m 6 --k 3 -o " + c).code == 0);
  REQUIRE(run("construct --family frankl_multiset --m 6 --k 3 --t 1 --r 1 -o " + d)
              .code == 0);
  CHECK(run("isomorphic " + c + " " + d).code == 1);
}

TEST_CASE("map") {
  auto r = run("map --m 3 --k 2 --set 1,4");
  CHECK(r.code == 0);
  CHECK(r.out == "1 1\n");
  CHECK(run("map --m 3 --k 2 --multiset 2,2").out == "2 4\n");

  auto sets = tmp("sets.txt");
  auto image = tmp("image.txt");
  auto back = tmp("back.txt");
  write(sets, "m=4 k=2 kind=set\n1 2\n1 4\n3 4\n");
  CHECK(run("map --family " + sets + " --direction forward -o " + image).code == 0);
  CHECK(read(image).rfind("m=3 k=2 kind=multiset", 0) == 0);
  CHECK(run("map --family " + image + " -o " + back).code == 0);
  CHECK(read(back) == read(sets));
  CHECK(run("map --family " + sets + " --direction inverse").code == 2);
}

TEST_CASE("compress with trace") {
  auto in = tmp("fixed.txt");
  auto out = tmp("compressed.txt");
  auto trace = tmp("trace.jsonl");
  REQUIRE(run("construct --family fixed_multiset --m 6 --k 4 --anchor 1,1 -o " + in)
              .code == 0);
  auto r = run("compress " + in + " --t 2 --trace " + trace + " -o " + out);
  CHECK(r.code == 0);
  CHECK(lines(read(out)) == 1 + 21);
  auto t = read(trace);
  CHECK(lines(t) > 0);
  CHECK(t.find("\"pass\"") != std::string::npos);
  CHECK(t.find("\"before\"") != std::string::npos);

  auto bad = tmp("bad.txt");
  write(bad, "m=3 k=2 kind=multiset\n1 1\n1 1\n");
  auto e = run("compress -i " + bad + " -t 1");
  CHECK(e.code == 2);
  CHECK(e.out.find("line 3") != std::string::npos);
  auto below = tmp("below.txt");
  REQUIRE(run("construct --family fixed_multiset --m 5 --k 4 --anchor 1,1 -o " + below)
              .code == 0);
  CHECK(run("compress " + below + " --t 2").code == 2);
}

TEST_CASE("search") {
  auto r = run("search --kind M --m 6 --k 3 --constraint empty-common");
  CHECK(r.code == 0);
  CHECK(r.out.find("16") != std::string::npos);
  auto json = tmp("search.json");
  CHECK(run("search --kind K --n 5 --k 2 --json " + json).code == 0);
  CHECK(read(json).find("\"optimum\": 4") != std::string::npos);
  CHECK(run("search --kind M --m 7 --k 4 --node-limit 2").code == 3);
  CHECK(run("search --kind M --m 12 --k 8").code == 3);
  CHECK(run("search --kind Q --m 3 --k 2").code == 2);
}

TEST_CASE("verify") {
  auto r = run("verify --theorem T3.4 --m 7 --k 2 --s 2");
  CHECK(r.code == 0);
  CHECK(r.out.find("13") != std::string::npos);
  CHECK(run("verify --theorem T1.1 --n 5 --k 2 --uniqueness").code == 0);
  CHECK(run("verify --theorem T3.3 --m 7 --k 4 --node-limit 3").code == 3);
  CHECK(run("verify --theorem T0 --m 3 --k 2").code == 2);
}

TEST_CASE("suite") {
  auto r = run("suite --profile quick");
  CHECK(r.code == 0);
  CHECK(r.out.find("AC-6") != std::string::npos);
  CHECK(run("suite --profile huge").code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run("").code == 2);
  CHECK(run("size --family star").code == 2);
  CHECK(run("isomorphic /nonexistent/a /nonexistent/b").code == 2);
}
