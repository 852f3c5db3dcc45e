#include "eqrel/closure.hpp"
#include "eqrel/reducibility.hpp"

#include "generators.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace eqrel;

namespace {

const ReductionFn kParity = ReductionFn::residue({0, 1});

Relation two_class_window(Nat bound)
{
    std::vector<Nat> rep(bound + 1);
    for (Nat x = 0; x <= bound; ++x)
        rep[x] = x % 2;
    return Relation::construction(Partition::from_representatives(rep));
}

// Least (x, y), x < y, violating the biconditional.
std::optional<NatPair> first_violation(const ReductionFn& f, const Relation& r, const Relation& s, Nat bound)
{
    for (Nat x = 0; x <= bound; ++x)
        for (Nat y = x + 1; y <= bound; ++y)
            if (r.holds(x, y) != s.holds(f(x), f(y)))
                return NatPair{x, y};
    return std::nullopt;
}

} // namespace

TEST_CASE("verify_reduction: worked examples")
{
    REQUIRE(oracle::is_reduction(kParity, make_id_n(2), make_id_n(3), 8));
    CHECK(verify_reduction(kParity, make_id_n(2), make_id_n(3), 8).status == VerdictStatus::valid);
    CHECK(verify_reduction(ReductionFn::identity(), make_id_n(2), make_id_n(2), 8).status == VerdictStatus::valid);

    const auto v = verify_reduction(ReductionFn::constant(0), make_id_n(2), make_id_n(2), 2);
    CHECK(v.status == VerdictStatus::invalid);
    CHECK(v.counterexample == NatPair{0, 1});
}

TEST_CASE("verify_reduction: image outside the target window")
{
    const auto small = two_class_window(3);
    CHECK_THROWS_AS(verify_reduction(ReductionFn::shift(1), make_id(), small, 3), WindowError);
    CHECK_THROWS_AS(verify_reduction(ReductionFn::identity(), small, make_id(), 4), WindowError);
}

TEST_CASE("verify_reduction reports the least counterexample")
{
    gen::Rng rng(17);
    int invalid = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const Nat bound = gen::uniform(rng, 0, 16);
        const auto r = gen::base_relation(rng, bound);
        const auto s = gen::base_relation(rng, 20);
        const auto f = gen::table_fn(rng, bound, std::min<Nat>(s.window_bound(), 20));
        const auto v = verify_reduction(f, r, s, bound);
        const auto expected = first_violation(f, r, s, bound);
        REQUIRE((v.status == VerdictStatus::valid) == !expected.has_value());
        REQUIRE(v.counterexample == expected);
        invalid += expected ? 1 : 0;
    }
    CHECK(invalid > 50);
}

TEST_CASE("search_reduction: worked examples")
{
    const auto up = search_reduction(make_id_n(2), make_id_n(3), 5, 5);
    REQUIRE(up.status == VerdictStatus::witness);
    CHECK(oracle::reduction_exists(make_id_n(2), make_id_n(3), 5, 5));
    CHECK(verify_reduction(*up.witness, make_id_n(2), make_id_n(3), 5).status == VerdictStatus::valid);

    const auto down = search_reduction(make_id_n(3), make_id_n(2), 5, 10);
    CHECK_FALSE(oracle::reduction_exists(make_id_n(3), make_id_n(2), 5, 10));
    CHECK(down.status == VerdictStatus::no_witness);
    CHECK(down.conclusive);
    REQUIRE(down.certificate);
    CHECK(down.certificate->source_representatives == std::vector<Nat>{0, 1, 2});
    CHECK(down.certificate->target_class_count == 2);
    CHECK(down.certificate->recheck(make_id_n(3), make_id_n(2)));

    const auto same = search_reduction(make_id(), make_id(), 4, 4);
    REQUIRE(same.status == VerdictStatus::witness);
    CHECK(*same.witness == ReductionFn::identity());
}

TEST_CASE("search_reduction only claims conclusiveness when the target class count is known")
{
    // Id has infinitely many classes; the image window is just too small.
    const auto v = search_reduction(make_id_n(3), make_id(), 5, 1);
    CHECK(v.status == VerdictStatus::no_witness);
    CHECK_FALSE(v.conclusive);
    CHECK_FALSE(v.certificate);

    // A window-only relation with two visible classes is not enough either.
    const auto w = search_reduction(make_id_n(3), two_class_window(9), 5, 9);
    CHECK(w.status == VerdictStatus::no_witness);
    CHECK_FALSE(w.conclusive);

    // A forged certificate does not recheck.
    PigeonholeCertificate forged{{0, 1, 2}, 2, {0, 1}};
    CHECK_FALSE(forged.recheck(make_id_n(3), make_id()));
    CHECK_FALSE(forged.recheck(make_id_n(2), make_id_n(2)));
}

TEST_CASE("search_reduction: residue tails make Id_m witnesses total")
{
    const auto v = search_reduction(make_id_n(3), make_id_n(5), 8, 8);
    REQUIRE(v.witness);
    CHECK(oracle::is_reduction(*v.witness, make_id_n(3), make_id_n(5), 200));
}

TEST_CASE("search_reduction returns the lexicographically least class map")
{
    gen::Rng rng(23);
    for (int trial = 0; trial < 150; ++trial) {
        const Nat bound = gen::uniform(rng, 0, 6);
        const Nat image_bound = gen::uniform(rng, 0, 6);
        const auto r = gen::base_relation(rng, bound);
        const auto s = gen::base_relation(rng, image_bound);
        const auto reps = least_representatives(r, bound);
        if (reps.size() > 4)
            continue;

        // Brute force over image tuples in lexicographic order.
        std::optional<std::vector<Nat>> best;
        std::vector<Nat> images(reps.size(), 0);
        while (true) {
            std::vector<Nat> table(bound + 1);
            for (Nat x = 0; x <= bound; ++x)
                for (std::size_t i = 0; i < reps.size(); ++i)
                    if (r.holds(x, reps[i]))
                        table[x] = images[i];
            if (oracle::is_reduction(ReductionFn(table, TailIdentity{}), r, s, bound)) {
                best = images;
                break;
            }
            std::size_t i = reps.size();
            while (i > 0 && ++images[i - 1] > image_bound)
                images[--i] = 0;
            if (i == 0)
                break;
        }

        const auto v = search_reduction(r, s, bound, image_bound);
        REQUIRE((v.status == VerdictStatus::witness) == best.has_value());
        if (best) {
            for (std::size_t i = 0; i < reps.size(); ++i)
                REQUIRE((*v.witness)(reps[i]) == (*best)[i]);
            REQUIRE(oracle::is_reduction(*v.witness, r, s, bound));
        }
    }
}

TEST_CASE("Id_m reduces to Id_n exactly when m <= n")
{
    for (Nat m = 1; m <= 6; ++m)
        for (Nat n = 1; n <= 6; ++n) {
            const Nat window = std::max(m, n) * 3;
            const auto v = search_reduction(make_id_n(m), make_id_n(n), window, window);
            CAPTURE(m);
            CAPTURE(n);
            CHECK((v.status == VerdictStatus::witness) == (m <= n));
            CHECK(oracle::reduction_exists(make_id_n(m), make_id_n(n), window, window) == (m <= n));
            if (m > n)
                CHECK((v.conclusive && v.certificate && v.certificate->recheck(make_id_n(m), make_id_n(n))));
        }
}

TEST_CASE("compose: worked examples")
{
    const ReductionFn g({3, 1}, TailConstant{2});
    const auto h = compose(ReductionFn::identity(), g);
    for (Nat x = 0; x < 10; ++x)
        CHECK(h(x) == g(x));
    CHECK(compose(kParity, ReductionFn::shift(0)) == kParity);

    const auto mod3 = ReductionFn::residue({0, 1, 2});
    REQUIRE(verify_reduction(kParity, make_id_n(2), make_id_n(3), 8).status == VerdictStatus::valid);
    REQUIRE(verify_reduction(mod3, make_id_n(3), make_id_n(3), 8).status == VerdictStatus::valid);
    CHECK(verify_reduction(compose(kParity, mod3), make_id_n(2), make_id_n(3), 8).status == VerdictStatus::valid);
}

TEST_CASE("collapse_map: worked examples")
{
    const auto h = collapse_map(ReductionFn::residue({0, 2}), make_id(), 5);
    CHECK(h(0) == 0);
    CHECK(h(1) == 2);
    CHECK(h(2) == 0);

    const auto h3 = collapse_map(ReductionFn::identity(), make_id_n(3), 8);
    for (Nat x = 0; x <= 8; ++x)
        CHECK(h3(x) == x % 3);

    const auto h7 = collapse_map(ReductionFn::constant(7), make_id(), 5);
    for (Nat x = 0; x <= 5; ++x)
        CHECK(h7(x) == 7);
    CHECK(h7(1000) == 7);
}

TEST_CASE("collapse_map contract")
{
    gen::Rng rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        const Nat bound = gen::uniform(rng, 0, 30);
        const auto e = gen::base_relation(rng, 40);
        const auto f = gen::table_fn(rng, bound, std::min<Nat>(e.window_bound(), 40));
        const auto h = collapse_map(f, e, bound);
        std::set<Nat> range;
        std::set<Nat> reps;
        for (Nat x = 0; x <= bound; ++x) {
            REQUIRE(e.holds(h(x), f(x)));
            range.insert(h(x));
            reps.insert(e.representative(f(x)));
            for (Nat y = 0; y <= bound; ++y)
                REQUIRE(e.holds(f(x), f(y)) == (h(x) == h(y)));
        }
        REQUIRE(range == reps);
        REQUIRE(range.count(h(bound + 100)) == 1);
    }
}

TEST_CASE("witness_map: worked examples")
{
    const Enumeration none;
    CHECK(witness_map(ReductionFn::identity(), none, make_id(), 5) == ReductionFn::identity());

    const auto swap = witness_map(ReductionFn({1, 0}, TailIdentity{}), none, make_id(), 1);
    CHECK(swap(0) == 1);
    CHECK(swap(1) == 0);

    const auto g = witness_map(kParity, none, make_id_n(2), 5);
    for (Nat x = 0; x <= 5; ++x)
        CHECK(g(x) == x % 2);
}

TEST_CASE("witness_map prefers the first-enumerated image")
{
    const auto enumeration = Enumeration::from_stages({{{3, 1}}});
    const auto e = Relation::ceer(enumeration);
    // The class {1, 3} is hit at 1 and 3; 3 is enumerated first.
    const auto g = witness_map(ReductionFn::identity(), enumeration, e, 3);
    CHECK(g(1) == 3);
    CHECK(g(3) == 3);
    CHECK(g(0) == 0);
    CHECK(g(2) == 2);

    // Among preimages of the chosen image the least wins.
    const auto enumeration2 = Enumeration::from_stages({{{3, 1}}, {{5, 4}}});
    const auto e2 = Relation::ceer(enumeration2);
    const auto h = witness_map(ReductionFn({3, 3, 1, 0, 2, 4}, TailIdentity{}), enumeration2, e2, 5);
    CHECK(h(1) == 0);
    CHECK(h(3) == 0);
    CHECK(h(0) == 3);
    CHECK(h(2) == 4);
    CHECK(h(4) == 5);
    CHECK(h(5) == 5);
}

TEST_CASE("witness_map coverage error")
{
    CHECK_THROWS_AS(witness_map(ReductionFn::constant(0), Enumeration{}, make_id_n(2), 3), CoverageError);
}

TEST_CASE("witness_map inverts a covering reduction")
{
    gen::Rng rng(41);
    int inverted = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const Nat bound = gen::uniform(rng, 1, 24);
        const auto e = gen::base_relation(rng, bound);
        const auto reps = least_representatives(e, bound);
        // f maps onto every class on the window
        std::vector<Nat> table(bound + 1);
        for (Nat x = 0; x <= bound; ++x)
            table[x] = x < reps.size() ? reps[x] : gen::uniform(rng, 0, bound);
        std::shuffle(table.begin(), table.end(), rng);
        const ReductionFn f(table, TailIdentity{});
        static const Enumeration empty;
        const auto g = witness_map(f, e.enumeration() ? *e.enumeration() : empty, e, bound);
        for (Nat x = 0; x <= bound; ++x)
            REQUIRE(e.holds(f(g(x)), x));

        // With S the pullback of e along f, f witnesses S <= e, and g witnesses e <= S.
        std::vector<Nat> rep(bound + 1);
        for (Nat x = 0; x <= bound; ++x) {
            rep[x] = x;
            for (Nat y = 0; y < x; ++y)
                if (e.holds(f(x), f(y))) {
                    rep[x] = rep[y];
                    break;
                }
        }
        const auto s = Relation::construction(Partition::from_representatives(rep));
        REQUIRE(verify_reduction(f, s, e, bound).status == VerdictStatus::valid);
        REQUIRE(verify_reduction(g, e, s, bound).status == VerdictStatus::valid);
        ++inverted;
    }
    CHECK(inverted == 200);
}

TEST_CASE("build_chain: worked examples")
{
    const auto id = ReductionFn::identity();
    CHECK(build_chain(id, id, 3, 4) == std::vector<Nat>{3, 3, 3, 3, 3});
    CHECK(build_chain(ReductionFn::shift(1), id, 0, 3) == std::vector<Nat>{0, 1, 2, 3});
    CHECK(build_chain(kParity, ReductionFn::shift(2), 1, 3) == std::vector<Nat>{1, 3, 3, 3});
    CHECK(build_chain(id, id, 9, 0) == std::vector<Nat>{9});
}

TEST_CASE("class_image_check: worked examples")
{
    CHECK(class_image_check(ReductionFn::identity(), make_id_n(2), make_id_n(2), 0, 6).status ==
          VerdictStatus::valid);
    CHECK(class_image_check(kParity, make_id_n(2), make_id_n(3), 1, 8).status == VerdictStatus::valid);
    const auto v = class_image_check(ReductionFn::constant(0), make_id_n(2), make_id_n(2), 0, 4);
    CHECK(v.status == VerdictStatus::invalid);
    CHECK(v.counterexample == NatPair{0, 1});
    CHECK_THROWS_AS(class_image_check(kParity, make_id_n(2), make_id_n(3), 9, 8), WindowError);
}

TEST_CASE("valid reductions are many-one reductions between classes")
{
    gen::Rng rng(53);
    int valid = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const Nat bound = gen::uniform(rng, 0, 12);
        const auto r = gen::base_relation(rng, bound);
        const auto s = gen::base_relation(rng, 16);
        ReductionFn f = gen::table_fn(rng, bound, std::min<Nat>(s.window_bound(), 16));
        if (trial % 2 == 0) {
            const auto found = search_reduction(r, s, bound, std::min<Nat>(s.window_bound(), 16));
            if (found.witness)
                f = *found.witness;
        }
        if (verify_reduction(f, r, s, bound).status != VerdictStatus::valid)
            continue;
        ++valid;
        for (Nat x0 = 0; x0 <= bound; ++x0)
            REQUIRE(class_image_check(f, r, s, x0, bound).status == VerdictStatus::valid);
    }
    CHECK(valid > 50);
}
