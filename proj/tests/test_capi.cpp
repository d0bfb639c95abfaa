// Exercises the shared-library C API the way an external consumer would:
// only the public header, statuses, and JSON payloads.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <string>

#include "horncone/horncone.h"

using nlohmann::json;

namespace {

struct Result {
  hc_result* ptr = nullptr;
  ~Result() { hc_result_free(ptr); }
  hc_status status() const { return hc_result_status(ptr); }
  std::string text() const { return hc_result_json(ptr); }
  json doc() const { return json::parse(text()); }
  std::string message() const { return hc_result_message(ptr); }
};

struct Options {
  hc_options* ptr = hc_options_new();
  ~Options() { hc_options_free(ptr); }
};

}  // namespace

TEST_CASE("status names") {
  CHECK(std::string(hc_status_name(HC_OK)) == "ok");
  CHECK(std::string(hc_status_name(HC_INFEASIBLE)) == "infeasible");
  CHECK(std::string(hc_status_name(HC_USAGE)) == "usage");
  CHECK(std::string(hc_status_name(HC_BUDGET)) == "budget");
  CHECK(std::string(hc_status_name(HC_UNRESOLVED)) == "unresolved");
  CHECK(std::string(hc_status_name(HC_ERROR)) == "error");
}

TEST_CASE("lr coefficient") {
  Result r;
  CHECK(hc_lr_coefficient("2,1", "2,1", "3,2,1", &r.ptr) == HC_OK);
  json d = r.doc();
  CHECK(d["coefficient"] == 2);
  CHECK(d["lambda"] == "2,1");
  CHECK(d["nu"] == "3,2,1");

  Result zero;
  CHECK(hc_lr_coefficient("1", "1", "3", &zero.ptr) == HC_OK);
  CHECK(zero.doc()["coefficient"] == 0);

  Result bad;
  CHECK(hc_lr_coefficient("1,-1", "1", "2,1", &bad.ptr) == HC_USAGE);
  CHECK(bad.message().find("not a partition") != std::string::npos);
  Result mal;
  CHECK(hc_lr_coefficient("1,2", "1", "2,1", &mal.ptr) == HC_USAGE);
  CHECK(mal.message().find("weakly decreasing") != std::string::npos);
}

TEST_CASE("schubert product") {
  Result r;
  CHECK(hc_schubert_product("1;1", 2, 4, &r.ptr) == HC_OK);
  json d = r.doc();
  CHECK(d["degree"] == 2);
  CHECK(d["terms"].size() == 2);
  CHECK(d["terms"]["2"] == 1);
  CHECK(d["terms"]["1,1"] == 1);

  Result top;  // sigma_1 * sigma_1 vanishes in Gr(1,2): (2) exceeds the box
  CHECK(hc_schubert_product("1;1", 1, 2, &top.ptr) == HC_OK);
  CHECK(top.doc()["terms"].empty());

  Result bad;
  CHECK(hc_schubert_product("1;1", 3, 2, &bad.ptr) == HC_USAGE);
}

TEST_CASE("lists") {
  Result r;  // R_all(2,2) has 2^2 - 1 = 3 entries
  CHECK(hc_lists(-1, 2, 2, 1, &r.ptr) == HC_OK);
  json d = r.doc();
  CHECK(d["list"] == "R");
  CHECK(d["entries"].size() == 3);
  for (const auto& e : d["entries"]) {
    CHECK(e["n"] == 2);
    CHECK(e["m"] == 2);
    CHECK(e["K"].is_null());
    CHECK(e["coeff"] == 1);
    CHECK(e["sets"].size() == 2);
  }

  Result s;  // S_all(5,3) frozen count
  CHECK(hc_lists(-1, 5, 3, 0, &s.ptr) == HC_OK);
  CHECK(s.doc()["entries"].size() == 421);

  Result bad;
  CHECK(hc_lists(0, 2, 2, 0, &bad.ptr) == HC_USAGE);
}

TEST_CASE("triples") {
  Result r;
  CHECK(hc_triples(2, 2, 0, nullptr, &r.ptr) == HC_OK);
  json d = r.doc();
  CHECK(d["flavour"] == "forward");
  CHECK(d["entries"].size() == 4);
  int trace = 0;
  for (const auto& e : d["entries"]) {
    CHECK(e["sets"].size() == 2);  // one index set per alpha factor
    CHECK(e["K"].is_array());
    if (e["K"].size() == 2) ++trace;
  }
  CHECK(trace == 1);

  Result rev;
  CHECK(hc_triples(2, 2, 1, nullptr, &rev.ptr) == HC_OK);
  CHECK(rev.doc()["flavour"] == "reverse");
  CHECK(rev.doc()["entries"].size() == 4);
}

TEST_CASE("check statuses and shapes") {
  Result ok;
  CHECK(hc_check("1,0;1,0", "2,0", nullptr, &ok.ptr) == HC_OK);
  json d = ok.doc();
  CHECK(d["feasible"] == true);
  CHECK(d["violated"].empty());
  CHECK(d["max_tight_r"] == 2);

  Result no;
  CHECK(hc_check("1,0;1,0", "2,1", nullptr, &no.ptr) == HC_INFEASIBLE);
  json nd = no.doc();
  CHECK(nd["feasible"] == false);
  REQUIRE(!nd["violated"].empty());
  CHECK(nd["violated"][0]["slack"] == "-1");

  Result rat;
  CHECK(hc_check("1,0;1,0", "2,1/2", nullptr, &rat.ptr) == HC_INFEASIBLE);
  CHECK(rat.doc()["violated"][0]["slack"] == "-1/2");

  Result eq;
  CHECK(hc_check_equality("1,0;1,0", "2,0", nullptr, &eq.ptr) == HC_OK);
  CHECK(eq.doc()["feasible"] == true);

  // Reverse flavour: gamma >= sum is the feasible direction.
  Result rev_ok;
  CHECK(hc_check_reverse("-1,-2;-1,-2", "0,-1", nullptr, &rev_ok.ptr) == HC_OK);
  Result rev_no;
  CHECK(hc_check_reverse("1,0;1,0", "0,-1", nullptr, &rev_no.ptr) == HC_INFEASIBLE);
}

TEST_CASE("usage errors") {
  Result inc;
  CHECK(hc_check("1,2;1,0", "2,0", nullptr, &inc.ptr) == HC_USAGE);
  CHECK(inc.message().find("weakly decreasing") != std::string::npos);

  Result len;
  CHECK(hc_check("1,0;1,0", "2,0,0", nullptr, &len.ptr) == HC_USAGE);
  CHECK(len.message().find("length") != std::string::npos);

  Result null;
  CHECK(hc_check(nullptr, "2,0", nullptr, &null.ptr) == HC_USAGE);
  CHECK(hc_check("1,0", "1,0", nullptr, nullptr) == HC_USAGE);
}

TEST_CASE("options plumbing") {
  Options o;
  REQUIRE(o.ptr != nullptr);
  CHECK(hc_options_set_seed(o.ptr, 7) == HC_OK);
  CHECK(hc_options_set_tolerance(o.ptr, 1e-9) == HC_OK);
  CHECK(hc_options_set_tolerance(o.ptr, -1.0) == HC_USAGE);
  CHECK(hc_options_set_coefficient_one_only(o.ptr, 0) == HC_OK);
  CHECK(hc_options_set_trials(o.ptr, 50) == HC_OK);
  CHECK(hc_options_set_seed(nullptr, 1) == HC_USAGE);

  // With coefficient_one_only off the S-lists drive the check; verdicts agree.
  Result with;
  CHECK(hc_check("2,1,0;2,1,0", "3,2,1", o.ptr, &with.ptr) == HC_OK);
  Result without;
  CHECK(hc_check("2,1,0;2,1,0", "3,2,1", nullptr, &without.ptr) == HC_OK);
  CHECK(with.doc()["feasible"] == without.doc()["feasible"]);

  // Float mode switches hc_check to the compiled double-precision system.
  Options f;
  CHECK(hc_options_set_float_mode(f.ptr, 1) == HC_OK);
  Result fl;
  CHECK(hc_check("1,0;1,0", "2,0", f.ptr, &fl.ptr) == HC_OK);
  CHECK(fl.doc()["mode"] == "float");
  Result flno;
  CHECK(hc_check("1,0;1,0", "2,1", f.ptr, &flno.ptr) == HC_INFEASIBLE);
  CHECK(flno.doc()["min_slack"] == -1.0);
  CHECK(flno.doc()["violations"].get<int>() >= 1);
}

TEST_CASE("lift and shrink") {
  Result lift;
  CHECK(hc_lift("1,0;1,0", "1,0", &lift.ptr) == HC_OK);
  json ld = lift.doc();
  CHECK(ld["lifted"] == "2,0");
  CHECK(ld["equality_feasible"] == true);

  Result shrink;
  CHECK(hc_shrink("1,0;1,0", "1,0", &shrink.ptr) == HC_OK);
  json sd = shrink.doc();
  REQUIRE(sd["shrunk"].size() == 2);
  CHECK(sd["shrunk"][0] == "0,0");
  CHECK(sd["shrunk"][1] == "1,0");
  CHECK(sd["tensor_multiplicity"] == 1);

  Result bad;  // infeasible instance reports instead of lifting
  CHECK(hc_lift("1,0;1,0", "2,1", &bad.ptr) == HC_INFEASIBLE);
  CHECK(bad.doc()["feasible"] == false);
  Result bad2;
  CHECK(hc_shrink("1,0;1,0", "2,1", &bad2.ptr) == HC_INFEASIBLE);
}

TEST_CASE("witness") {
  Result sum;
  CHECK(hc_witness("1,-1;1,-1", nullptr, nullptr, &sum.ptr) == HC_OK);
  json d = sum.doc();
  CHECK(d["status"] == "success");
  CHECK(d["C"].is_null());
  CHECK(d["matrices"].size() == 2);
  CHECK(d["matrices"][0].size() == 2);
  CHECK(d["split_tree"]["kind"] == "split");  // decomposes along the tight r=1 tuple
  CHECK(d["spectral_residual"] == 0.0);

  Result maj;
  CHECK(hc_witness("1,0;1,0", "1,1", nullptr, &maj.ptr) == HC_OK);
  CHECK(maj.doc()["C"].is_array());

  Result no;
  CHECK(hc_witness("1,0;1,0", "2,1", nullptr, &no.ptr) == HC_INFEASIBLE);
  CHECK(no.doc()["status"] == "infeasible");

  // Determinism: repeat calls serialize byte-identically.
  Result again;
  CHECK(hc_witness("1,-1;1,-1", nullptr, nullptr, &again.ptr) == HC_OK);
  CHECK(again.text() == sum.text());
  Result maj2;
  CHECK(hc_witness("1,0;1,0", "1,1", nullptr, &maj2.ptr) == HC_OK);
  CHECK(maj2.text() == maj.text());
}

TEST_CASE("modules") {
  Result yes;
  CHECK(hc_modules("1", "1", "2", 2, &yes.ptr) == HC_OK);
  json d = yes.doc();
  CHECK(d["bruteforce"] == true);
  CHECK(d["lr"] == true);
  CHECK(d["inequality"] == true);
  CHECK(d["agree"] == true);
  CHECK(d["p"] == 2);

  Result no;
  CHECK(hc_modules("1", "1", "1,1,1", 2, &no.ptr) == HC_INFEASIBLE);
  CHECK(no.doc()["bruteforce"] == false);
  CHECK(no.doc()["agree"] == true);

  Result big;  // p^11 elements blow the enumeration budget
  CHECK(hc_modules("1", "1", "11", 2, &big.ptr) == HC_BUDGET);
  CHECK(big.doc()["bruteforce"].is_null());
  CHECK(big.doc()["lr"].is_boolean());

  Result bad;
  CHECK(hc_modules("1", "2", "1", 6, &bad.ptr) == HC_USAGE);
  CHECK(bad.message().find("prime") != std::string::npos);
}

TEST_CASE("minimal") {
  Result r;
  CHECK(hc_minimal(2, 2, nullptr, &r.ptr) == HC_OK);
  json d = r.doc();
  CHECK(d["all_essential"] == true);
  CHECK(d["conditional"] == false);
  CHECK(d["inequalities"].size() == 7);

  Result over;
  CHECK(hc_minimal(5, 2, nullptr, &over.ptr) == HC_BUDGET);
}

TEST_CASE("verify necessity") {
  Options o;
  hc_options_set_trials(o.ptr, 40);
  Result r;
  CHECK(hc_verify_necessity(2, 2, o.ptr, &r.ptr) == HC_OK);
  json d = r.doc();
  CHECK(d["trials"] == 40);
  CHECK(d["violations"] == 0);

  Result bad;
  CHECK(hc_verify_necessity(0, 2, o.ptr, &bad.ptr) == HC_USAGE);
}

TEST_CASE("sweep") {
  Result r;
  CHECK(hc_sweep(3, 2, 3, 2, &r.ptr) == HC_OK);
  json d = r.doc();
  CHECK(d["equivalence"]["all_passed"] == true);
  CHECK(d["modules"]["all_passed"] == true);

  Result bad;
  CHECK(hc_sweep(-1, 2, 3, 2, &bad.ptr) == HC_USAGE);
}
