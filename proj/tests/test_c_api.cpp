#include <doctest.h>

#include <cstring>
#include <string>
#include <thread>
#include <vector>

#include "hopf/hopf_c.h"

namespace {

struct Ctx {
  hopf_context* c = hopf_context_new();
  ~Ctx() { hopf_context_free(c); }
  std::string out() const { return hopf_output(c); }
  std::string err() const { return hopf_last_error(c); }
};

}  // namespace

TEST_CASE("coproduct and antipode") {
  Ctx ctx;
  REQUIRE(hopf_coproduct(ctx.c, "ck", "[[],[]]") == HOPF_OK);
  std::string d = ctx.out();
  CHECK(d.find("2*[] (x) [[]]") != std::string::npos);
  CHECK(d.find("[] [] (x) []") != std::string::npos);
  REQUIRE(hopf_antipode(ctx.c, "ck", "[[]]") == HOPF_OK);
  CHECK(ctx.out() == "1*[] [] + -1*[[]]\n");
  REQUIRE(hopf_product(ctx.c, "qshuffle", "f1", "f1") == HOPF_OK);
  CHECK(ctx.out() == "2*f1.f1 + 1*f2\n");
  REQUIRE(hopf_product(ctx.c, "qsym", "M(1)", "M(1)") == HOPF_OK);
  CHECK(ctx.out() == "2*M(1,1) + 1*M(2)\n");
}

TEST_CASE("errors") {
  Ctx ctx;
  CHECK(hopf_coproduct(ctx.c, "ck", "[[]") == HOPF_ERR_PARSE);
  CHECK(hopf_last_error_offset(ctx.c) == 3);
  CHECK(ctx.err().find("unbalanced bracket") != std::string::npos);
  CHECK(hopf_coproduct(ctx.c, "nope", "[]") == HOPF_ERR_INVALID_ARG);
  CHECK(hopf_pi(ctx.c, "[[]]") == HOPF_ERR_DOMAIN);
  CHECK(hopf_last_error_offset(ctx.c) == -1);
  CHECK(hopf_lyndon(ctx.c, 0) == HOPF_ERR_INVALID_ARG);
  CHECK(hopf_lyndon(ctx.c, 13) == HOPF_ERR_INVALID_ARG);
  CHECK(hopf_check(ctx.c, "no-such-suite", 3) != HOPF_OK);
  CHECK(hopf_coproduct(nullptr, "ck", "[]") == HOPF_ERR_INVALID_ARG);
  CHECK(hopf_coproduct(ctx.c, nullptr, "[]") == HOPF_ERR_INVALID_ARG);
  CHECK(std::strcmp(hopf_status_string(HOPF_OK), "") != 0);
  // a successful call clears the error
  REQUIRE(hopf_parse(ctx.c, "tree", "f2[f1]") == HOPF_OK);
  CHECK(ctx.err().empty());
  CHECK(ctx.out() == "f2[f1]\n");
}

TEST_CASE("parse kinds") {
  Ctx ctx;
  REQUIRE(hopf_parse(ctx.c, "forest", "[[]] []") == HOPF_OK);
  CHECK(ctx.out() == "[] [[]]\n");
  REQUIRE(hopf_parse(ctx.c, "word", "f1.f2.f1") == HOPF_OK);
  CHECK(ctx.out() == "f1.f2.f1\n");
  REQUIRE(hopf_parse(ctx.c, "bbr", "<><>") == HOPF_OK);
  CHECK(ctx.out() == "<><>\n");
  REQUIRE(hopf_parse(ctx.c, "planar", "[[[]],[]]") == HOPF_OK);
  CHECK(ctx.out() == "[[[]],[]]\n");
}

TEST_CASE("pi, lyndon, hall, zhao") {
  Ctx ctx;
  REQUIRE(hopf_pi(ctx.c, "f1[f2,f3]") == HOPF_OK);
  CHECK(ctx.out() == "1*f2.f3.f1 + 1*f3.f2.f1\n");
  REQUIRE(hopf_lyndon(ctx.c, 3) == HOPF_OK);
  CHECK(ctx.out().find("f2.f1") != std::string::npos);
  REQUIRE(hopf_hall(ctx.c, 3, "standard") == HOPF_OK);
  CHECK(ctx.out().find("E = 1*e(-1)e(-2) + -1*e(-2)e(-1)") != std::string::npos);
  CHECK(hopf_hall(ctx.c, 3, "sideways") == HOPF_ERR_INVALID_ARG);
  REQUIRE(hopf_zhao(ctx.c, "eps", "2") == HOPF_OK);
  CHECK(ctx.out() == "1/2*[[],[]]\n");
  REQUIRE(hopf_zhao(ctx.c, "Zstar", "[[],[]]") == HOPF_OK);
  CHECK(ctx.out() == "2*M(1,1,1) + 1*M(2,1)\n");
}

TEST_CASE("frame series handle") {
  Ctx ctx;
  hopf_frame_series* s = nullptr;
  REQUIRE(hopf_frame_series_new(ctx.c, 3, &s) == HOPF_OK);
  REQUIRE(hopf_frame_series_size(s) == 7);
  const int* letters = nullptr;
  size_t length = 0;
  const char* coeff = nullptr;
  long v = 0, z = 0;
  REQUIRE(hopf_frame_series_term(s, 0, &letters, &length, &coeff, &v, &z) == HOPF_OK);
  CHECK(length == 1);
  CHECK(letters[0] == 1);
  CHECK(std::string(coeff) == "1");
  CHECK(v == 1);
  CHECK(z == -1);
  CHECK(hopf_frame_series_term(s, 7, &letters, &length, &coeff, &v, &z) == HOPF_ERR_INVALID_ARG);
  hopf_frame_series_free(s);
  REQUIRE(hopf_frame(ctx.c, 2, "json") == HOPF_OK);
  CHECK(ctx.out().rfind("{\"max_weight\":2", 0) == 0);
  CHECK(hopf_frame(ctx.c, 2, "xml") == HOPF_ERR_INVALID_ARG);
}

TEST_CASE("check") {
  Ctx ctx;
  CHECK(hopf_check(ctx.c, "prop53", 4) == HOPF_OK);
  CHECK(ctx.out().find("PASS") != std::string::npos);
}

TEST_CASE("one context per thread") {
  std::vector<std::thread> threads;
  std::vector<int> ok(4, 0);
  for (int i = 0; i < 4; ++i)
    threads.emplace_back([&ok, i] {
      Ctx ctx;
      ok[i] = hopf_antipode(ctx.c, "ck", "[[],[[]]]") == HOPF_OK && !ctx.out().empty();
    });
  for (auto& t : threads) t.join();
  for (int v : ok) CHECK(v == 1);
}
