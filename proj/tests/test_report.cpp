#include <doctest.h>

#include "trapcong/report.hpp"
#include "trapcong/verify.hpp"

using namespace trapcong;

TEST_SUITE_BEGIN("report");

TEST_CASE("report json schema") {
    Report r;
    r.claim_id = "example";
    r.paper_value = "1";
    r.computed_value = "2";
    r.status = Status::Fail;
    r.witnesses.push_back(nlohmann::json{{"n", 2}});
    auto j = to_json(r);
    CHECK(j["claim_id"] == "example");
    CHECK(j["paper_value"] == "1");
    CHECK(j["computed_value"] == "2");
    CHECK(j["status"] == "FAIL");
    CHECK(j["witnesses"].size() == 1);
}

TEST_CASE("exit code policy") {
    Report pass{.claim_id = "a", .paper_value = "", .computed_value = "", .status = Status::Pass};
    Report note{.claim_id = "b", .paper_value = "", .computed_value = "", .status = Status::Note};
    Report errata{.claim_id = "c",
                  .paper_value = "",
                  .computed_value = "",
                  .status = Status::Fail,
                  .witnesses = nlohmann::json::array({1}),
                  .expected_errata = true};
    Report bug{.claim_id = "d", .paper_value = "", .computed_value = "", .status = Status::Fail};

    CHECK(exit_code({pass, note}, false) == 0);
    CHECK(exit_code({pass, errata}, false) == 1);
    CHECK(exit_code({pass, errata}, true) == 0);
    CHECK(exit_code({pass, bug}, true) == 1);
}

TEST_CASE("deterministic section output") {
    VerifyOptions opt;
    opt.prop41_grid = 5;
    auto a = verify_paper(Scope::Section4, opt);
    auto b = verify_paper(Scope::Section4, opt);
    CHECK(to_json(a).dump() == to_json(b).dump());
    CHECK(!a.empty());
    // every failure carries a witness or counterexample
    for (const auto& r : a)
        if (r.status == Status::Fail) CHECK(!r.witnesses.empty());
}

TEST_SUITE_END();
