#include <doctest.h>

#include <sstream>

#include "upmnet/cli.hpp"
#include "upmnet/json_io.hpp"

using namespace upmnet;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Outcome call(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int status = run(args, in, out, err);
  return {status, out.str(), err.str()};
}

const std::string kTensorParPar =
    R"({"links":[{"id":0,"kind":"ax"},{"id":1,"kind":"ax"},{"id":2,"kind":"tensor"},{"id":3,"kind":"par"},)"
    R"({"id":4,"kind":"par"}],"edges":[[0,2],[1,2],[0,3],[1,3],[2,4],[3,4]]})";

const std::string kRing =
    R"({"links":[{"id":0,"kind":"par"},{"id":1,"kind":"tensor"},{"id":2,"kind":"par"},{"id":3,"kind":"ax"},)"
    R"({"id":4,"kind":"ax"},{"id":5,"kind":"ax"}],"edges":[[4,0],[4,2],[3,0],[3,1],[5,1],[5,2]]})";

}  // namespace

TEST_CASE("check: correct net") {
  const Outcome o = call({"check"}, kTensorParPar);
  CHECK(o.status == 0);
  CHECK(o.json() == Json::parse(R"({"correct": true, "mix_count": 1})"));
}

TEST_CASE("check: proofified square is incorrect with a witness") {
  const Outcome net = call({"translate", "--to", "proofify"},
                           R"({"vertices":4,"edges":[[0,2],[1,3],[0,1],[2,1],[2,3]],"matching":[0,1]})");
  REQUIRE(net.status == 0);
  const Outcome o = call({"check"}, net.out);
  CHECK(o.status == 1);
  CHECK(o.json()["witness"]["links"].size() == 6);
}

TEST_CASE("check: MLL mode rejects nets that need Mix") {
  CHECK(call({"check", "--mode", "mix"}, kRing).status == 0);
  const Outcome o = call({"check", "--mode", "mll"}, kRing);
  CHECK(o.status == 1);
  CHECK(o.json()["mix_count"] == 2);
}

TEST_CASE("bad input exits with 2") {
  CHECK(call({"check"}, "{not json").status == 2);
  CHECK(call({"check"}, R"({"links":[{"id":0,"kind":"tensor"}],"edges":[]})").status == 2);
  CHECK(call({"frobnicate"}).status == 2);
  CHECK(call({"translate", "--to", "nowhere"}, kRing).status == 2);
  CHECK(call({"check", "/no/such/file.json"}).status == 2);
}

TEST_CASE("gen: empty unique instance and reproducible nets") {
  const Outcome empty = call({"gen", "--kind", "upm", "--size", "0"});
  CHECK(empty.status == 0);
  CHECK(empty.json() == Json::parse(R"({"vertices":0,"edges":[],"matching":[]})"));
  const Outcome a = call({"gen", "--kind", "net", "--size", "30", "--seed", "7"});
  const Outcome b = call({"gen", "--kind", "net", "--size", "30", "--seed", "7"});
  CHECK(a.out == b.out);
  CHECK(call({"check"}, a.out).status == 0);
  for (int seed = 1; seed <= 20; ++seed) {
    const Outcome g = call({"gen", "--mode", "mll", "--size", "25", "--seed", std::to_string(seed)});
    CHECK(call({"check", "--mode", "mll"}, g.out).status == 0);
  }
}

TEST_CASE("every output validates") {
  const Outcome proofified = call({"translate", "--to", "proofify"},
                                  R"({"vertices":4,"edges":[[0,2],[1,3],[0,1],[2,1],[2,3]],"matching":[0,1]})");
  const std::string star = R"({"vertices":5,"edges":[[1,3],[0,2],[1,4],[3,4],[0,4],[2,4]],"pairs":[[2,3],[4,5]]})";
  const std::vector<Outcome> outputs{
      call({"check"}, kTensorParPar),
      call({"check"}, proofified.out),
      call({"seq"}, kTensorParPar),
      call({"seq"}, proofified.out),
      call({"kingdom"}, kRing),
      call({"translate", "--to", "rb"}, kTensorParPar),
      call({"translate", "--to", "graphify"}, kTensorParPar),
      proofified,
      call({"translate", "--to", "lpm"}, star),
      call({"trail"}, star),
      call({"trail", "--all"}, star),
      call({"gen", "--kind", "upm", "--size", "6", "--seed", "3"}),
      call({"gen", "--kind", "graph", "--size", "6"}),
      call({"gen", "--mode", "rewired", "--size", "12"}),
  };
  for (const Outcome& o : outputs) {
    CAPTURE(o.out);
    const Outcome v = call({"validate"}, o.out);
    CHECK(v.status == 0);
    CHECK(v.json()["valid"] == true);
  }
}

TEST_CASE("validate flags a broken derivation") {
  Json doc = call({"seq"}, kTensorParPar).json();
  doc["derivation"]["nodes"][0]["link"] = 1;
  doc["derivation"]["nodes"][1]["link"] = 0;
  const Outcome v = call({"validate"}, doc.dump());
  CHECK(v.status == 1);
  CHECK(v.json()["valid"] == false);
}

TEST_CASE("kingdom and seq output") {
  const Json k = call({"kingdom", "--crosscheck"}, kRing).json();
  CHECK(k["greatest"].is_null());
  CHECK(k["dependencies"].empty());
  CHECK(k["agrees_with_enumeration"] == true);
  const Outcome pretty = call({"seq", "--pretty"}, kTensorParPar);
  CHECK(pretty.out.rfind("par 4", 0) == 0);
  CHECK(call({"trail"}, R"({"vertices":2,"edges":[[0,1]]})").status == 1);
}
