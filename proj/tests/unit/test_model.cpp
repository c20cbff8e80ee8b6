#include <doctest.h>

#include "rentmin/generators.hpp"
#include "rentmin/io.hpp"
#include "rentmin/model.hpp"

using namespace rentmin;

namespace {

std::string error_of(const Instance& inst) {
    try {
        validate_instance(inst);
    } catch (const ValidationError& e) {
        return e.what();
    }
    return "";
}

std::string parse_error(const std::string& text) {
    try {
        parse_instance(text);
    } catch (const ValidationError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("validate_instance accepts a well-formed instance") {
    Instance inst{10, 0, {{1, 0, 5}}};
    CHECK(&validate_instance(inst) == &inst);
    CHECK(error_of(inst).empty());
}

TEST_CASE("validate_instance reports the violated invariant and job") {
    CHECK(error_of({10, 0, {{1, 5, 5}}}).find("d >= r+1 violated") != std::string::npos);
    CHECK(error_of({10, 3, {{1, 0, 3}}}).find("d-r >= lambda+1 violated") != std::string::npos);
    CHECK(error_of({10, 0, {{1, 0, 5}, {1, 1, 4}}}).find("duplicate job id 1") != std::string::npos);
    CHECK(error_of({0, 0, {}}).find("T >= 1") != std::string::npos);
    CHECK(error_of({1, -1, {}}).find("lambda >= 0") != std::string::npos);
    CHECK(error_of({1, 0, {{0, 0, 1}}}).find("positive") != std::string::npos);

    try {
        validate_instance({10, 3, {{1, 0, 9}, {7, 0, 3}}});
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        REQUIRE(e.job().has_value());
        CHECK(*e.job() == 7);
    }
}

TEST_CASE("validate_instance is idempotent on generated instances") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        GenSpec spec;
        spec.seed = seed;
        auto inst = gen_random(spec);
        CHECK(validate_instance(validate_instance(inst)) == inst);
    }
}

TEST_CASE("parse_instance maps fields directly") {
    auto inst = parse_instance(R"({"T":10,"lambda":0,"jobs":[{"id":1,"r":0,"d":5}]})");
    CHECK(inst.T == 10);
    CHECK(inst.lambda == 0);
    REQUIRE(inst.jobs.size() == 1);
    CHECK(inst.jobs[0] == Job{1, 0, 5});
}

TEST_CASE("parse_instance rejects bad input") {
    CHECK(parse_error(R"({"T":0,"lambda":0,"jobs":[]})").find("T >= 1") != std::string::npos);
    CHECK(parse_error(R"({"T":10,"lambda":0,"jobs":[)").find("malformed") != std::string::npos);
    CHECK(parse_error(R"({"T":10,"jobs":[]})").find("missing field 'lambda'") != std::string::npos);
    CHECK(parse_error(R"({"T":10,"lambda":0,"jobs":[{"id":1,"r":0.5,"d":5}]})").find("must be an integer") !=
          std::string::npos);
    CHECK(parse_error(R"({"T":"10","lambda":0,"jobs":[]})").find("must be an integer") != std::string::npos);
    CHECK(parse_error(R"({"T":10,"lambda":0,"jobs":{}})").find("must be an array") != std::string::npos);
    CHECK(parse_error(R"([1,2])").find("object") != std::string::npos);
}

TEST_CASE("serialize is canonical: sorted keys, jobs by id") {
    std::string text = R"({"T":10,"lambda":0,"jobs":[{"id":1,"r":0,"d":5}]})";
    CHECK(serialize_instance(parse_instance(text)) == R"({"T":10,"jobs":[{"d":5,"id":1,"r":0}],"lambda":0})");

    Instance shuffled{3, 1, {{4, 2, 9}, {2, 0, 5}, {3, 1, 3}}};
    CHECK(serialize_instance(shuffled) ==
          R"({"T":3,"jobs":[{"d":5,"id":2,"r":0},{"d":3,"id":3,"r":1},{"d":9,"id":4,"r":2}],"lambda":1})");
}

TEST_CASE("parse and serialize are inverse on canonical instances") {
    for (std::uint64_t seed = 100; seed < 150; ++seed) {
        GenSpec spec;
        spec.seed = seed;
        spec.n = static_cast<std::int64_t>(seed % 13);
        spec.lambda = static_cast<Time>(seed % 3);
        spec.min_window = spec.lambda + 1;
        auto text = serialize_instance(gen_random(spec));
        CHECK(serialize_instance(parse_instance(text)) == text);
    }
}

TEST_CASE("instance digest depends only on the canonical form") {
    Instance a{3, 0, {{1, 0, 2}, {2, 1, 3}}};
    Instance b{3, 0, {{2, 1, 3}, {1, 0, 2}}};
    CHECK(instance_digest(a) == instance_digest(b));
    CHECK(instance_digest(a).size() == 16);
    b.jobs[0].d = 4;
    CHECK(instance_digest(a) != instance_digest(b));
}

TEST_CASE("RentSet has multiset semantics") {
    RentSet I;
    I.add({0, 10});
    I.add({0, 10});
    CHECK(I.size() == 2);
    CHECK(I.count({0, 10}) == 2);

    RentSet J{{5, 15}, {0, 10}, {0, 10}};
    CHECK(I.is_submultiset_of(J));
    CHECK_FALSE(J.is_submultiset_of(I));
    CHECK(I.difference_from(J).sorted() == std::vector<RentInterval>{{5, 15}});
    CHECK(same_multiset(RentSet{{1, 2}, {0, 3}}, RentSet{{0, 3}, {1, 2}}));
    CHECK_FALSE(same_multiset(RentSet{{0, 3}}, RentSet{{0, 3}, {0, 3}}));
    CHECK(RentSet{{-2, 1}}.shifted(3).intervals[0] == RentInterval{1, 4});
}

TEST_CASE("schedule_problem finds each broken schedule invariant") {
    std::vector<Job> jobs{{1, 0, 2}, {2, 0, 2}};
    RentSet rents{{0, 1}, {0, 2}};
    Schedule good{{{1, 0, 0}, {2, 0, 1}}};
    CHECK_FALSE(schedule_problem(jobs, rents, good).has_value());

    CHECK(schedule_problem(jobs, rents, Schedule{{{1, 0, 0}}}).has_value());
    CHECK(schedule_problem(jobs, rents, Schedule{{{1, 0, 0}, {2, 2, 1}}})->find("outside") != std::string::npos);
    CHECK(schedule_problem(jobs, rents, Schedule{{{1, 1, 0}, {2, 0, 1}}})->find("does not cover") != std::string::npos);
    CHECK(schedule_problem(jobs, rents, Schedule{{{1, 0, 1}, {2, 0, 1}}})->find("already busy") != std::string::npos);
    CHECK(schedule_problem(jobs, rents, Schedule{{{1, 0, 0}, {2, 0, 7}}})->find("does not exist") != std::string::npos);
}
