#include "eqrel/audit.hpp"
#include "eqrel/closure.hpp"
#include "eqrel/constructions.hpp"

#include "generators.hpp"

#include <doctest.h>

#include <algorithm>

using namespace eqrel;

namespace {

const Finding& finding(const AuditReport& report, const std::string& check)
{
    const auto it = std::find_if(report.findings.begin(), report.findings.end(),
                                 [&](const Finding& f) { return f.check == check; });
    REQUIRE(it != report.findings.end());
    return *it;
}

} // namespace

TEST_CASE("minimality: a set inside one class of Id_2")
{
    const auto report = minimality_criterion(make_id_n(2), {0}, 9);
    CHECK(finding(report, "classes-hit").values == std::vector<Nat>{0});
    CHECK(finding(report, "classes-missed").values == std::vector<Nat>{1});
    CHECK(finding(report, "minimality-criterion").outcome == "consistent");
    CHECK_FALSE(report.has_violation_evidence());
}

TEST_CASE("minimality: a set meeting every class of Id")
{
    std::vector<Nat> w;
    for (Nat x = 0; x <= 9; ++x)
        w.push_back(x);
    const auto report = minimality_criterion(make_id(), w, 9);
    CHECK(finding(report, "classes-hit").values.size() == 10);
    CHECK(finding(report, "classes-missed").values.empty());
    CHECK(finding(report, "minimality-criterion").outcome == "consistent");
}

TEST_CASE("minimality: many classes hit but one missed")
{
    const auto report = minimality_criterion(make_id_n(3), {0, 1}, 8);
    CHECK(finding(report, "classes-missed").values == std::vector<Nat>{2});
    CHECK(finding(report, "minimality-criterion").outcome == kViolationEvidence);
    CHECK(report.has_violation_evidence());

    const auto strict = minimality_criterion(make_id_n(3), {0, 1}, 8, Nat{2});
    CHECK_FALSE(strict.has_violation_evidence());
}

TEST_CASE("minimality: a set with two elements meets two classes of Id")
{
    gen::Rng rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        const Nat bound = gen::uniform(rng, 2, 40);
        std::vector<Nat> w;
        const Nat a = gen::uniform(rng, 0, bound);
        Nat b = gen::uniform(rng, 0, bound);
        if (b == a)
            b = (a + 1) % (bound + 1);
        w = {a, b};
        const auto report = minimality_criterion(make_id(), w, bound);
        CHECK(finding(report, "classes-hit").values.size() >= 2);
    }
}

TEST_CASE("minimality: hit and missed partition the window's classes")
{
    gen::Rng rng(42);
    for (int trial = 0; trial < 100; ++trial) {
        const Nat window = gen::uniform(rng, 1, 30);
        const Relation r = gen::base_relation(rng, window);
        std::vector<Nat> w;
        for (Nat i = gen::uniform(rng, 0, 6); i > 0; --i)
            w.push_back(gen::uniform(rng, 0, window));
        const auto report = minimality_criterion(r, w, window);
        auto all = finding(report, "classes-hit").values;
        const auto& missed = finding(report, "classes-missed").values;
        all.insert(all.end(), missed.begin(), missed.end());
        std::sort(all.begin(), all.end());
        CHECK(all == r.restrict(window).representatives());
    }
}

TEST_CASE("darkness: identity is an Id fragment of Id")
{
    const auto report = darkness_evidence(make_id(), {ReductionFn::identity()}, 10);
    CHECK(finding(report, "candidate-0/id-fragment").outcome == "evidence-against-darkness");
    CHECK(finding(report, "candidate-0/chain").outcome == "chain-repeats-class");
    CHECK(finding(report, "darkness").outcome == "not-certifiable");
}

TEST_CASE("darkness: a shift gives a pairwise inequivalent chain in Id")
{
    const auto report = darkness_evidence(make_id(), {ReductionFn::shift(1)}, 10);
    const auto& chain = finding(report, "candidate-0/chain");
    CHECK(chain.outcome == "chain-pairwise-inequivalent");
    CHECK(chain.values.front() == 0);
}

TEST_CASE("darkness: fragments into a one-class relation are invalid")
{
    const Relation one = close({make_id(), {{0, 1}, {1, 2}, {2, 3}, {3, 4}}}, 4);
    const auto report = darkness_evidence(one, {ReductionFn::identity()}, 4);
    const auto& f = finding(report, "candidate-0/id-fragment");
    CHECK(f.outcome == "fragment-invalid");
    CHECK(f.values == std::vector<Nat>{0, 1});
}

TEST_CASE("darkness: identity into Id_2 collides at 0 and 2")
{
    const auto report = darkness_evidence(make_id_n(2), {ReductionFn::identity()}, 3);
    const auto& f = finding(report, "candidate-0/id-fragment");
    CHECK(f.outcome == "fragment-invalid");
    CHECK(f.values == std::vector<Nat>{0, 2});
}

TEST_CASE("darkness is never confirmed")
{
    gen::Rng rng(43);
    for (int trial = 0; trial < 60; ++trial) {
        const Nat window = gen::uniform(rng, 1, 24);
        const Relation r = gen::base_relation(rng, window);
        std::vector<ReductionFn> fs;
        for (int i = 0; i < 3; ++i)
            fs.push_back(gen::table_fn(rng, window, window));
        const auto report = darkness_evidence(r, fs, window);
        for (const auto& f : report.findings) {
            CHECK(f.conclusiveness == Conclusiveness::bound_relative);
            CHECK(f.outcome.find("confirmed") == std::string::npos);
        }
        CHECK(report.findings.back().outcome == "not-certifiable");
    }
}

TEST_CASE("incomparability: Id_3 and Id_2")
{
    const Relation id3 = make_id_n(3);
    const Relation id2 = make_id_n(2);
    const auto report = incomparability_refute(id3, id2, 8, 8, "Id_3", "Id_2");
    const auto& forward = finding(report, "Id_3<=Id_2");
    CHECK(forward.outcome == "refuted");
    CHECK(forward.conclusiveness == Conclusiveness::conclusive);
    REQUIRE(forward.certificate);
    CHECK(forward.certificate->recheck(id3, id2));
    CHECK(finding(report, "Id_2<=Id_3").outcome == "witnessed");
}

TEST_CASE("incomparability: Id_4 against itself")
{
    const auto report = incomparability_refute(make_id_n(4), make_id_n(4), 8, 8, "A", "B");
    CHECK(finding(report, "A<=B").outcome == "witnessed");
    CHECK(finding(report, "B<=A").outcome == "witnessed");
}

TEST_CASE("incomparability: pair merges with different oracles reduce both ways on a window")
{
    const auto e0 = build({make_id(), OracleSet({0}), std::nullopt, ConstructionVariant::pair_merge}, 6);
    const auto e1 = build({make_id(), OracleSet({1}), std::nullopt, ConstructionVariant::pair_merge}, 6);
    const auto report = incomparability_refute(e0, e1, 6, 6, "E0", "E1");
    for (const auto& f : report.findings) {
        CHECK(f.outcome == "witnessed");
        CHECK(f.conclusiveness == Conclusiveness::bound_relative);
    }
}

TEST_CASE("audit reports render as text and csv")
{
    const auto report = minimality_criterion(make_id_n(3), {0, 1}, 8, std::nullopt, "M");
    const auto csv = report.to_csv();
    CHECK(csv.rfind("relation,bound,check,outcome,conclusiveness,witness\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
    CHECK(report.to_text().find("minimality-criterion: violation-evidence") != std::string::npos);
}
