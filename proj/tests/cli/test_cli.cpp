#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "sset_cli/cli.hpp"

using namespace sset;

namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run sset_run(std::vector<std::string> args) {
  args.insert(args.begin(), "sset");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

fs::path scratch() {
  fs::path d = fs::temp_directory_path() / "sset_cli_tests";
  fs::create_directories(d);
  return d;
}

const fs::path data = SSET_DATA_DIR;

}  // namespace

TEST_CASE("prism bundle") {
  const auto p = scratch() / "prism110.json";
  const auto r = sset_run({"prism", "--m", "1", "--n", "1", "--k", "0", "--out", p.string(), "--json"});
  CHECK(r.code == 0);
  const Json s = Json::parse(r.out);
  CHECK(s["pairs"] == 2);
  CHECK(s["stages"] == 2);
  CHECK(sset_run({"verify", p.string()}).code == 0);
}

TEST_CASE("usage errors") {
  CHECK(sset_run({"prism", "--m", "0", "--n", "1", "--k", "0"}).code == 1);
  CHECK(sset_run({"prism", "--m", "1", "--n", "1", "--k", "2"}).code == 1);
  CHECK(sset_run({"bogus"}).code == 1);
  CHECK(sset_run({}).code == 1);
  CHECK(sset_run({"verify", (scratch() / "missing.json").string()}).code == 1);
}

TEST_CASE("reruns are byte-identical") {
  const auto a = scratch() / "a.json";
  const auto b = scratch() / "b.json";
  for (const auto& cmd : std::vector<std::vector<std::string>>{
           {"sd-horn", "--n", "3", "--k", "1"},
           {"ex", "--input", (data / "horn21.json").string(), "--dim", "2"},
           {"pullback", "--config", (data / "z2_projection.json").string(), "--k", "0"}}) {
    auto ca = cmd;
    ca.insert(ca.end(), {"--out", a.string()});
    auto cb = cmd;
    cb.insert(cb.end(), {"--out", b.string()});
    REQUIRE(sset_run(ca).code == 0);
    REQUIRE(sset_run(cb).code == 0);
    CHECK(slurp(a) == slurp(b));
  }
}

TEST_CASE("tampered bundle is rejected") {
  const auto p = scratch() / "prism221.json";
  REQUIRE(sset_run({"prism", "--m", "2", "--n", "2", "--k", "1", "--out", p.string()}).code == 0);
  Json j = read_json_file(p);
  Json& fi = j["pstructure"]["pairs"][0]["face_index"];
  fi = fi.get<int>() == 0 ? 1 : 0;
  const auto t = scratch() / "tampered.json";
  write_file_atomic(t, dump(j));
  const auto r = sset_run({"verify", t.string(), "--json"});
  CHECK(r.code == 2);
  const Json rep = Json::parse(r.out);
  CHECK(rep["ok"] == false);
  CHECK(!rep["violations"].empty());
}

TEST_CASE("serialization is lossless") {
  const auto bundle = cli::pullback_bundle(read_json_file(data / "codiscrete_projection.json"), 2, -1);
  const Json j = to_json(bundle);
  const auto back = bundle_from_json(Json::parse(dump(j)));
  CHECK(to_json(back) == j);
  CHECK(back.structure.pairs == bundle.structure.pairs);
  CHECK(back.structure.deferred == bundle.structure.deferred);
  CHECK(cli::verify_bundle(back).ok());
}

TEST_CASE("compile attaches a presentation") {
  const auto p = scratch() / "sd2.json";
  REQUIRE(sset_run({"sd-horn", "--n", "2", "--k", "2", "--out", p.string()}).code == 0);
  Json j = read_json_file(p);
  j.erase("presentation");
  write_file_atomic(p, dump(j));
  const auto q = scratch() / "sd2c.json";
  CHECK(sset_run({"compile", p.string(), "--out", q.string()}).code == 0);
  CHECK(read_json_file(q).contains("presentation"));
}

TEST_CASE("ex bundle marks deferred simplices") {
  const auto r = sset_run({"ex", "--input", (data / "boundary2.json").string(), "--dim", "2"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(!j["pstructure"]["deferred"].empty());
  CHECK(j["provenance"]["command"] == "ex");
}

TEST_CASE("pullback along the identity rebuilds the simplex") {
  const auto r = sset_run({"pullback", "--config", (data / "id2.json").string(), "--k", "1", "--bound", "3"});
  REQUIRE(r.code == 0);
  const auto b = bundle_from_json(Json::parse(r.out));
  CHECK(b.structure.deferred.empty());
  REQUIRE(b.presentation.has_value());
  CHECK(verify_presentation(*b.complex, b.structure.base, *b.presentation).ok());
}

TEST_CASE("budget exhaustion") {
  CHECK(sset_run({"ex", "--input", (data / "boundary2.json").string(), "--dim", "3", "--max-simplices", "50"}).code == 3);
}

TEST_CASE("eqcheck") {
  const auto r = sset_run({"eqcheck", "--max-n", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("10/10 equations, 0 failures") != std::string::npos);
}

TEST_CASE("mutations are detected") {
  std::mt19937_64 rng(7);
  const Json j = to_json(cli::prism_bundle(2, 1, 1));
  for (int i = 0; i < 20; ++i) {
    Json m = j;
    const std::string what = cli::mutate_bundle(m, rng);
    CAPTURE(what);
    CHECK(!cli::verify_bundle(bundle_from_json(m)).ok());
  }
}
