#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "rankone/json_io.hpp"

using rankone::io::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + RANKONE_GAP_BIN + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& rel) { return std::string(RANKONE_DATA_DIR) + "/" + rel; }

}  // namespace

TEST_CASE("documented examples") {
  auto r = run("cfun eval --d 2 --sigma 0 --tau 0 --s 2");
  CHECK(r.code == 0);
  CHECK(r.out == "0.5\n");

  r = run("gap params --kappa-gamma 1 --d 2");
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["kappa1"].dump() == "0.0833333333333333");

  r = run("duals dual --n 2 --entries 3");
  CHECK(r.code == 0);
  CHECK(r.out == "{\"n\":2,\"entries\":[-3]}\n");
}

TEST_CASE("numbers carry 15 significant digits") {
  CHECK(run("cfun eval --d 2 --sigma 0 --tau 0 --s 3").out == "0.333333333333333\n");
  CHECK(run("cfun eval --d 1 --tau 0 --s 1").out == "0.636619772367581\n");
  CHECK(run("cfun eval --d 2 --sigma 1 --tau 1 --s 1.5 --scaled").out == "1.2\n");
}

TEST_CASE("exit codes") {
  CHECK(run("duals validate --n 4 --entries 2,-1").code == 0);
  CHECK(run("duals validate --n 4 --entries 1,2").code == 1);
  CHECK(run("duals dual --n 2 --entries 3 --bogus").code == 2);
  CHECK(run("nosuch").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("cfun eval --d 2 --sigma 0 --tau 0").code == 2);
  CHECK(run("gap verdict --model /nonexistent.json").code == 2);
  CHECK(run("cfun scan --d 2 --sigma 1 --grid 101").code == 0);
  CHECK(run("cfun scan --d 2 --sigma 0 --tau 2 --grid 100").code == 1);
  CHECK(run("gap verdict --model " + data("models/gap_d4.json")).code == 0);
  CHECK(run("gap verdict --model " + data("models/no_gap_d4.json")).code == 1);
  CHECK(run("sim poles --model " + data("models/atom_at_delta.json") + " --eta 0.1").code == 0);
  CHECK(run("sim poles --model " + data("models/quasi_complementary.json") + " --eta 0.1").code == 1);
}

TEST_CASE("scan CSV") {
  const auto r = run("cfun scan --d 2 --sigma 1 --grid 4");
  CHECK(r.out ==
        "s,value,classification\n"
        "1.25,0.444444444444444,finite\n"
        "1.5,0.4,finite\n"
        "1.75,0.363636363636364,finite\n"
        "2,0.333333333333333,finite\n");
  const auto neg = run("cfun scan --d 2 --sigma 0 --tau 2 --grid 100");
  CHECK(neg.out.find("\n2,0,zero\n") != std::string::npos);
}

TEST_CASE("correlate CSV") {
  const auto r = run("sim correlate --model " + data("models/two_channel_d3.json") + " --t-max 1 --dt 0.5");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("t,re,im\n0,1.08,0.49\n", 0) == 0);
}

TEST_CASE("model-driven commands") {
  auto r = run("stieltjes transform --model " + data("measures/uniform01.json") + " --z-re 2");
  CHECK(json::parse(r.out)["value"]["re"].get<double>() == doctest::Approx(std::log(2.0)).epsilon(1e-14));

  r = run("stieltjes invert --model " + data("measures/uniform01.json") + " --a 0.2 --b 0.5");
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["estimate"].get<double>() == doctest::Approx(0.3).epsilon(1e-6));

  r = run("stieltjes detect --model " + data("measures/atom_half.json") + " --a 0 --b 1");
  CHECK(json::parse(r.out)["verdict"] == "does_not_vanish");

  r = run("sim compare --model " + data("models/two_channel_d3.json"));
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["pass"] == true);

  r = run("sim rank --q " + data("forms/outer.json"));
  CHECK(json::parse(r.out)["rank"] == 1);
  r = run("sim rank --q " + data("forms/identity.json"));
  CHECK(json::parse(r.out)["rank"] == 2);

  r = run("gap verdict --no-enforce-support --model " + data("models/gap_d2.json"));
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["kappa_gamma"].get<double>() == doctest::Approx(0.15));
}

TEST_CASE("every JSON schema field is versioned") {
  for (const std::string args : {"gap params --kappa-gamma 0.5 --d 3", "ktype witness --d 4 --sigma 2,-1",
                                 "sim rank --random 5 --seed 1"}) {
    CHECK(json::parse(run(args).out)["schema"] == "rankone-gap/1");
  }
}

TEST_CASE("emitted JSON is accepted by the loaders") {
  const auto w = rankone::io::weight_from_json(json::parse(run("duals dual --n 6 --entries 2,1,1").out));
  CHECK(w.entries() == std::vector<std::int64_t>{2, 1, -1});
  const auto branch = json::parse(run("duals branch --n 4 --entries 1,0").out);
  REQUIRE(branch.size() == 2);
  for (const auto& b : branch) CHECK_NOTHROW(rankone::io::weight_from_json(b));
  const auto witness = json::parse(run("ktype witness --d 3 --sigma 2").out);
  CHECK(rankone::io::weight_from_json(witness["tau"]).entries() == std::vector<std::int64_t>{2, 0});
}

TEST_CASE("identical argv and seed give identical bytes") {
  for (const std::string& args : std::vector<std::string>{"sim rank --random 200 --seed 17", "cfun scan --d 5 --sigma 3,1 --grid 101",
                                 "sim compare --model " + data("models/two_channel_d3.json")}) {
    const auto a = run(args), b = run(args);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
  CHECK(run("--seed 17 sim rank --random 200").out == run("sim rank --random 200 --seed 17").out);
}

TEST_CASE("worker count does not change output") {
  const std::string args = "cfun scan --d 6 --sigma 3,2,-1 --grid 101";
  const auto one = run(args, "RANKONE_GAP_THREADS=1");
  const auto many = run("--threads 4 " + args);
  CHECK(one.out == many.out);
  CHECK(run(args, "RANKONE_KERNEL=scalar").out == one.out);
}
