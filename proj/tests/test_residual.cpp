#include "trajedit/residual.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "test_util.hpp"
#include "trajedit/editor.hpp"

using namespace trajedit;
using testutil::random_pose;
using testutil::random_vec3;
using testutil::random_walk;
using testutil::rot_z;

namespace {

constexpr double kDeg = M_PI / 180.0;

struct Pipeline {
    Trajectory base, human, corrected;
    EditResult edit;
    std::size_t k_star{60}, n_points{20};
};

Pipeline build_pipeline(unsigned seed) {
    Pipeline p;
    std::mt19937 rng(seed);
    p.base = random_walk(rng, 100, 2e-3, 0.02);
    Pose cur{p.base.poses[p.k_star].p + Vec3{0.004, -0.003, 0.002},
             rot_z(5 * kDeg) * p.base.poses[p.k_star].q};
    p.human.dt = p.base.dt;
    for (int i = 0; i < 30; ++i) {
        p.human.poses.push_back(cur);
        cur = Pose{cur.p + random_vec3(rng, 1e-3), rot_z(0.5 * kDeg) * cur.q};
    }
    EditConfig cfg;
    cfg.n_points = p.n_points;
    p.edit = optimize_segment(p.base, p.k_star, p.human.front(), cfg);
    p.corrected = assemble_corrected(p.base, p.k_star, p.edit.segment, p.human, p.n_points);
    return p;
}

}  // namespace

TEST_CASE("compose_action adds positions and left-composes rotations") {
    const Pose base{{1.0, 2.0, 3.0}, rot_z(20 * kDeg)};
    const PoseResidual r{{0.1, -0.2, 0.3}, rot_z(10 * kDeg)};
    const Pose out = compose_action(base, r);
    CHECK(out.p.x() == doctest::Approx(1.1));
    CHECK(out.p.y() == doctest::Approx(1.8));
    CHECK(out.p.z() == doctest::Approx(3.3));
    CHECK(quaternion_distance(out.q, rot_z(30 * kDeg)) <= 1e-12);

    const Pose same = compose_action(base, PoseResidual::zero());
    CHECK(same.p == base.p);
    CHECK(quaternion_distance(same.q, base.q) <= 1e-15);
}

TEST_CASE("residual_between inverts compose_action") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 1000; ++trial) {
        const Pose action = random_pose(rng, 1.0);
        const Pose target = random_pose(rng, 1.0);
        const PoseResidual r = residual_between(target, action);
        const Pose back = compose_action(action, r);
        CHECK(position_distance(back, target) < 1e-10);
        CHECK(quaternion_distance(back, target) < 1e-10);
    }
}

TEST_CASE("playback policy clamps at the plan end and expects zero wrench") {
    std::mt19937 rng(42);
    const Trajectory plan = random_walk(rng, 5);
    const PlaybackPolicy policy(plan);
    const Pose anywhere = random_pose(rng);
    CHECK(policy.query(anywhere, 0).p == plan.poses[1].p);
    CHECK(policy.query(anywhere, 2).p == plan.poses[3].p);
    CHECK(policy.query(anywhere, 4).p == plan.poses[4].p);
    CHECK(policy.query(anywhere, 100).p == plan.poses[4].p);
    const Wrench w = policy.query_wrench(anywhere, 3);
    CHECK(w.f == Vec3::Zero());
    CHECK(w.tau == Vec3::Zero());
}

TEST_CASE("full rollout produces the four regions with closed-form counts") {
    const Pipeline p = build_pipeline(43);
    const PlaybackPolicy policy(p.base);
    const std::vector<ResidualSample> samples =
        generate_samples(p.base, p.corrected, p.edit.segment, p.human, p.k_star, p.n_points,
                         policy);

    // s = 40: 40 pre + 20 transition + 29 demo + 39 post
    REQUIRE(samples.size() == 128);
    std::size_t counts[4] = {0, 0, 0, 0};
    for (const ResidualSample& s : samples) counts[static_cast<int>(s.region)]++;
    CHECK(counts[0] == 40);
    CHECK(counts[1] == 20);
    CHECK(counts[2] == 29);
    CHECK(counts[3] == 39);

    const std::size_t s0 = p.k_star - p.n_points;
    for (const ResidualSample& s : samples) {
        switch (s.region) {
            case Region::PreEdit: {
                CHECK(s.step_index < s0);
                CHECK(s.state.p == p.base.poses[s.step_index].p);
                CHECK(s.residual.dp == Vec3::Zero());
                CHECK(quaternion_distance(s.residual.dq, Quat::Identity()) == 0.0);
                CHECK(s.base_action.p == p.base.poses[s.step_index + 1].p);
                break;
            }
            case Region::Transition: {
                REQUIRE(s.step_index >= s0);
                REQUIRE(s.step_index < p.k_star);
                CHECK(s.state.p == p.base.poses[s.step_index].p);
                const Pose expect = p.edit.segment.poses[s.step_index + 1 - s0];
                const Pose got = compose_action(s.base_action, s.residual);
                CHECK(position_distance(got, expect) < 1e-10);
                CHECK(quaternion_distance(got, expect) < 1e-10);
                break;
            }
            case Region::HumanDemo: {
                const std::size_t t = s.step_index - p.k_star;
                REQUIRE(t + 1 < p.human.size());
                CHECK(s.state.p == p.human.poses[t].p);
                CHECK(s.base_action.p == policy.query(s.state, s.step_index).p);
                const Pose got = compose_action(s.base_action, s.residual);
                CHECK(position_distance(got, p.human.poses[t + 1]) < 1e-10);
                CHECK(quaternion_distance(got, p.human.poses[t + 1]) < 1e-10);
                break;
            }
            case Region::PostEdit: {
                REQUIRE(s.step_index >= p.k_star);
                REQUIRE(s.step_index + 1 < p.base.size());
                CHECK(s.state.p == p.base.poses[s.step_index].p);
                const std::size_t best = oracles::best_demo_match(p.human, s.base_action, 0.5);
                const Pose got = compose_action(s.base_action, s.residual);
                CHECK(position_distance(got, p.human.poses[best]) < 1e-10);
                CHECK(quaternion_distance(got, p.human.poses[best]) < 1e-10);
                break;
            }
        }
    }
}

TEST_CASE("region subsets filter the emitted samples") {
    const Pipeline p = build_pipeline(44);
    const PlaybackPolicy policy(p.base);

    RegionSet demo_only = RegionSet::none();
    demo_only.set(Region::HumanDemo, true);
    const auto demo = generate_samples(p.base, p.corrected, p.edit.segment, p.human, p.k_star,
                                       p.n_points, policy, demo_only);
    REQUIRE(demo.size() == 29);
    for (const ResidualSample& s : demo) CHECK(s.region == Region::HumanDemo);

    const auto none = generate_samples(p.base, p.corrected, p.edit.segment, p.human, p.k_star,
                                       p.n_points, policy, RegionSet::none());
    CHECK(none.empty());

    RegionSet no_post = RegionSet::all();
    no_post.set(Region::PostEdit, false);
    const auto three = generate_samples(p.base, p.corrected, p.edit.segment, p.human, p.k_star,
                                        p.n_points, policy, no_post);
    CHECK(three.size() == 89);
}

TEST_CASE("generate_samples rejects inconsistent inputs") {
    const Pipeline p = build_pipeline(45);
    const PlaybackPolicy policy(p.base);

    CHECK_THROWS_AS(generate_samples(p.base, p.corrected, p.edit.segment, p.human, p.base.size(),
                                     p.n_points, policy),
                    std::invalid_argument);
    CHECK_THROWS_AS(generate_samples(p.base, p.corrected, p.edit.segment, p.human, p.k_star,
                                     p.n_points + 1, policy),
                    std::invalid_argument);

    Trajectory far = p.human;
    far.poses[0].p += Vec3{0.01, 0, 0};
    CHECK_THROWS_AS(generate_samples(p.base, p.corrected, p.edit.segment, far, p.k_star,
                                     p.n_points, policy),
                    std::invalid_argument);

    Trajectory short_corrected = p.corrected;
    short_corrected.poses.pop_back();
    CHECK_THROWS_AS(generate_samples(p.base, short_corrected, p.edit.segment, p.human, p.k_star,
                                     p.n_points, policy),
                    std::invalid_argument);
}

TEST_CASE("region names and sets round trip through their string forms") {
    for (Region r : {Region::PreEdit, Region::Transition, Region::HumanDemo, Region::PostEdit}) {
        const auto back = region_from_name(region_name(r));
        REQUIRE(back.has_value());
        CHECK(*back == r);
    }
    CHECK(!region_from_name("prefix").has_value());

    CHECK(RegionSet::all().to_string() == "pre,transition,demo,post");
    CHECK(RegionSet::none().to_string() == "none");
    CHECK(RegionSet::from_string("none") == RegionSet::none());
    CHECK(RegionSet::from_string("") == RegionSet::none());
    CHECK(!RegionSet::from_string("pre,bogus").has_value());

    for (int mask = 0; mask < 16; ++mask) {
        RegionSet set = RegionSet::none();
        set.pre_edit = mask & 1;
        set.transition = mask & 2;
        set.human_demo = mask & 4;
        set.post_edit = mask & 8;
        const auto back = RegionSet::from_string(set.to_string());
        REQUIRE(back.has_value());
        CHECK(*back == set);
    }
}
