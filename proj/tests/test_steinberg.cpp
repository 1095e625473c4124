#include <doctest.h>

#include "weilrep/steinberg.hpp"

using namespace wr;

namespace {

VirtualRep d(long long l) { return VirtualRep(IrredWR::discrete(l)); }

} // namespace

TEST_CASE("steinberg parameters") {
    CHECK(steinberg_param(GroupDescriptor::gl(2)) == d(2));
    CHECK(steinberg_param(GroupDescriptor::gl(3)) ==
          d(3) + VirtualRep(sign_char()));
    CHECK(steinberg_param(GroupDescriptor::sp(4)) ==
          d(5) + d(3) + VirtualRep(trivial_char()));
    CHECK(steinberg_param(GroupDescriptor::so(2, 1)) == d(2));
}

TEST_CASE("steinberg parameters are tempered") {
    for (long long n = 1; n <= 8; ++n)
        CHECK(is_tempered(steinberg_param(GroupDescriptor::gl(n))));
    for (long long n = 1; n <= 5; ++n)
        CHECK(is_tempered(steinberg_param(GroupDescriptor::sp(2 * n))));
}

TEST_CASE("sym powers of D_2 are multiplicity-free selfduals of one parity") {
    VirtualRep d2 = d(2);
    for (long long k = 1; k <= 41; ++k) {
        auto s = sym_power(k, d2);
        CHECK(s.multiplicity_free());
        SelfdualType expect =
            k % 2 == 1 ? SelfdualType::Symplectic : SelfdualType::Orthogonal;
        for (auto& [rep, m] : s.summands()) CHECK(selfdual_type(rep) == expect);
    }
}

TEST_CASE("discreteness predicate") {
    CHECK(is_discrete_param(d(2), GroupDescriptor::gl(2)));
    CHECK_FALSE(is_discrete_param(steinberg_param(GroupDescriptor::gl(3)),
                                  GroupDescriptor::gl(3)));
    for (long long n = 1; n <= 5; ++n) {
        auto g = GroupDescriptor::sp(2 * n);
        CHECK(is_discrete_param(steinberg_param(g), g));
    }
    auto so = GroupDescriptor::so(3, 2);
    CHECK(is_discrete_param(steinberg_param(so), so));
    CHECK_THROWS_AS(is_discrete_param(d(2), GroupDescriptor::gl(3)),
                    dimension_mismatch);
}

TEST_CASE("packet sizes from the summand-count rule") {
    VirtualRep d2 = d(2);
    CHECK(packet_size_param(sym_power(3, d2), 3) == 4);
    CHECK(packet_size_param(sym_power(4, d2), 4) == 4);
    CHECK(packet_size_param(sym_power(1, d2), 1) == 2);
}

TEST_CASE("closed-form packet sizes and root-data ratios") {
    CHECK(steinberg_packet_size(GroupDescriptor::sp(2)) == 2);
    CHECK(steinberg_packet_size(GroupDescriptor::sp(4)) == 4);
    CHECK(weyl_ratio(GroupDescriptor::sp(4)) == Rat(4));

    // The closed form and the root-data ratio disagree for SO(2,1).
    CHECK(steinberg_packet_size(GroupDescriptor::so(2, 1)) == 3);
    CHECK(weyl_ratio(GroupDescriptor::so(2, 1)) == Rat(2));

    CHECK(steinberg_packet_size(GroupDescriptor::so(3, 2)) == 10);
    CHECK(weyl_ratio(GroupDescriptor::so(3, 2)) == Rat(8, 2));

    CHECK_THROWS_AS(steinberg_packet_size(GroupDescriptor::gl(3)), unsupported_group);
}

TEST_CASE("steinberg inf char matches the Borel exponents") {
    for (long long n = 1; n <= 8; ++n) {
        auto s = steinberg_param(GroupDescriptor::gl(n));
        std::vector<GaussQ> expect;
        for (long long i = 0; i < n; ++i)
            expect.emplace_back(Rat(-(n - 1) + 2 * i, 2));
        CHECK(inf_char(s) == expect);
    }
}
