#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

using lowlying::cli::run;
using Json = nlohmann::json;

namespace {

Json run_json(const std::vector<std::string>& args, int expected_code = 0) {
  const auto r = run(args);
  REQUIRE_MESSAGE(r.exit_code == expected_code, r.err);
  return Json::parse(r.out);
}

} // namespace

TEST_CASE("identities suite") {
  const Json doc = run_json({"identities", "--kmax", "8", "--miller-kmax", "40"});
  CHECK(doc.at("suite") == "identities");
  CHECK(doc.at("failures").empty());
  CHECK(doc.at("config").at("kmax") == 8);
  CHECK(doc.at("config").at("miller_kmax") == 40);
  CHECK(doc.at("checks").size() == 8);
  for (const auto& c : doc.at("checks")) CHECK(c.at("failures") == 0);

  const auto csv = run({"identities", "--kmax", "3", "--output", "csv"});
  CHECK(csv.exit_code == 0);
  CHECK(csv.out.rfind("check,range,cases,failures\n", 0) == 0);
  CHECK(csv.out.find("S3,\"1 <= n, r <= 3\",9,0") != std::string::npos);
}

TEST_CASE("constants command") {
  const Json doc = run_json({"constants", "--r", "2", "--kappa", "12", "--cutoff", "100000", "--c-cutoff", "10000"});
  CHECK(doc.at("config").at("command") == "constants");
  CHECK(doc.at("config").at("cutoff") == 100000);
  CHECK(doc.at("c_pnt").at("cutoff") == 100000);
  CHECK(doc.at("c_pnt").at("reference_cutoff") == 10000);
  CHECK(doc.at("c").at("cutoff") == 10000);
  CHECK(doc.at("c").at("tail_bound").get<double>() > 0.0);
  CHECK(doc.at("nu_max") == "361/754");
  CHECK(doc.contains("c_gamma"));
  CHECK(doc.contains("c_infty"));
}

TEST_CASE("predict command") {
  const Json doc = run_json({"predict", "--r", "1", "--kappa", "12", "--q", "10007", "--nu", "0.5"});
  CHECK(doc.at("main_term").get<double>() == 1.25);
  CHECK(doc.at("breakdown").at("c_term").get<double>() == 0.0);
  CHECK(doc.at("admissible") == true);
  CHECK(doc.at("nu") == "1/2");
  CHECK(doc.at("config").at("cutoff") == 10000000);
  CHECK(doc.at("constants").at("c_pnt").at("cutoff") == 10000000);
  CHECK(doc.at("warnings").empty());
  CHECK(doc.at("lower_coefficient") == doc.at("lower_coefficient_alt"));

  const Json edge =
      run_json({"predict", "--r", "2", "--kappa", "12", "--q", "101", "--nu", "361/754", "--cutoff", "1000"});
  CHECK(edge.at("admissible") == false);
  CHECK(edge.at("warnings").size() == 1);
  const Json below =
      run_json({"predict", "--r", "2", "--kappa", "12", "--q", "101", "--nu", "0.4787798408", "--cutoff", "1000"});
  CHECK(below.at("admissible") == true);
}

TEST_CASE("pterms command is reproducible") {
  const std::vector<std::string> args{"pterms", "--seed", "17", "--dist", "sato-tate", "--r",  "2",
                                      "--kappa", "12",  "--q",    "101",       "--nu", "0.8"};
  const auto a = run(args);
  const auto b = run(args);
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
  const Json doc = Json::parse(a.out);
  CHECK(doc.at("form").at("seed") == 17);
  CHECK(doc.at("config").at("dist") == "sato-tate");
  CHECK(doc.at("cutoffs").at("p1") == 1610);  // floor(101^1.6)
  CHECK(doc.at("p2").size() == 2);

  auto other = args;
  other[2] = "18";
  CHECK(run(other).out != a.out);

  auto csv_args = args;
  csv_args.insert(csv_args.end(), {"--output", "csv"});
  const auto csv = run(csv_args);
  CHECK(csv.exit_code == 0);
  CHECK(csv.out.rfind("term,m,value,prime_cutoff\nP1,,", 0) == 0);

  auto threaded = args;
  threaded.insert(threaded.begin(), {"--threads", "3"});
  const Json t = Json::parse(run(threaded).out);
  CHECK(t.at("p1") == doc.at("p1"));
  CHECK(t.at("config").at("threads") == 3);
}

TEST_CASE("petersson and tau-check commands") {
  const Json p = run_json({"petersson", "--m", "2", "--k", "1", "--kappa", "12"});
  CHECK(p.at("c_max") == 1000);
  CHECK(p.at("config").at("cmax") == 1000);
  CHECK(p.at("tail_rigorous") == true);

  const Json short_sum = run_json({"petersson", "--m", "400", "--kappa", "12", "--cmax", "50"});
  CHECK(short_sum.at("tail_rigorous") == false);
  CHECK(short_sum.at("warnings").size() == 1);

  const Json tau = run_json({"tau-check", "--kappa", "12", "--m-list", "2,3,4,5"});
  CHECK(tau.at("rows").size() == 4);
  CHECK(tau.at("all_within") == true);
  CHECK(tau.at("rows")[0].at("m") == 2);
  CHECK(tau.at("rows")[0].at("target").get<double>() == doctest::Approx(-0.530330).epsilon(1e-6));
  CHECK(tau.at("config").at("m_list") == Json::array({2, 3, 4, 5}));

  const auto csv = run({"tau-check", "--m-list", "2", "--output", "csv"});
  CHECK(csv.out.rfind("m,value,target,abs_diff,tail,within,c_max\n2,", 0) == 0);
}

TEST_CASE("usage errors exit 1") {
  CHECK(run({}).exit_code == 1);
  CHECK(run({"identities", "--bogus"}).exit_code == 1);
  CHECK(run({"--bogus", "identities"}).exit_code == 1);
  CHECK(run({"frobnicate"}).exit_code == 1);
  CHECK(run({"constants", "--r", "2"}).exit_code == 1);
  CHECK(run({"constants", "--r", "2", "--kappa", "12", "--output", "csv"}).exit_code == 1);
  CHECK(run({"petersson", "--m", "2", "--kappa", "12", "--output", "xml"}).exit_code == 1);
  CHECK(run({"predict", "--r", "1", "--kappa", "12", "--q", "10000", "--nu", "0.5"}).exit_code == 1);
  CHECK(run({"predict", "--r", "1", "--kappa", "12", "--q", "11", "--nu", "0.5", "--phi", "gauss"}).exit_code == 1);
  CHECK(run({"pterms", "--r", "1", "--kappa", "12", "--q", "11", "--nu", "x"}).exit_code == 1);
  CHECK(run({"pterms", "--r", "1", "--kappa", "11", "--q", "11", "--nu", "0.5"}).exit_code == 1);
  CHECK(run({"pterms", "--r", "1", "--kappa", "12", "--q", "11", "--nu", "0.5", "--eps", "2"}).exit_code == 1);
  CHECK(run({"tau-check", "--kappa", "16"}).exit_code == 1);
  CHECK(run({"identities", "--threads", "0"}).exit_code == 1);
  const auto err = run({"identities", "--nope"});
  CHECK(err.err.find("--nope") != std::string::npos);
  CHECK(err.out.empty());

  const auto help = run({"--help"});
  CHECK(help.exit_code == 0);
  CHECK(help.out.find("identities") != std::string::npos);
}
