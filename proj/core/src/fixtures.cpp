#include "ybh/fixtures.hpp"

#include <algorithm>

#include "ybh/constructions.hpp"
#include "ybh/errors.hpp"

namespace ybh {

const std::vector<FixtureInfo>& braided_fixtures() {
    static const std::vector<FixtureInfo> list = {
        {"z2_adjoint", "k[Z/2] with the adjoint braiding", 2, std::nullopt},
        {"z3_adjoint", "k[Z/3] with the adjoint braiding", 3, std::nullopt},
        {"klein_adjoint", "k[Z/2 x Z/2] with the adjoint braiding", 4, std::nullopt},
        {"s3_adjoint", "k[S_3] with the adjoint braiding", 6, std::nullopt},
        {"mcq_z2_z2", "MCQ algebra of Z/2 u Z/2 with x * y = x", 4, std::nullopt},
        {"heap_z2", "heap algebra of Z/2", 4, std::nullopt},
        {"heap_z3", "heap algebra of Z/3", 9, std::nullopt},
        {"trivial_m2", "2x2 matrix algebra with R = tau", 4, std::nullopt},
        {"trivial_dual", "k[t]/(t^2) with R = tau", 2, std::nullopt},
        {"frobenius_z2", "braided Frobenius algebra of k[Z/2]", 4, std::nullopt},
        {"frobenius_z3", "braided Frobenius algebra of k[Z/3]", 9, std::nullopt},
    };
    return list;
}

const std::vector<FixtureInfo>& hopf_fixtures() {
    static const std::vector<FixtureInfo> list = {
        {"hopf_z2", "group Hopf algebra k[Z/2]", 2, std::nullopt},
        {"hopf_z3", "group Hopf algebra k[Z/3]", 3, std::nullopt},
        {"hopf_s3", "group Hopf algebra k[S_3]", 6, std::nullopt},
        {"hopf_dual", "F_2[t]/(t^2), t primitive", 2, 2u},
    };
    return list;
}

bool fixture_defined(const FixtureInfo& f, const FieldSpec& k) {
    return !f.only_characteristic || *f.only_characteristic == k.characteristic();
}

namespace {

const FixtureInfo& lookup(const std::vector<FixtureInfo>& list, const std::string& name) {
    auto it = std::find_if(list.begin(), list.end(), [&](const FixtureInfo& f) { return f.name == name; });
    if (it == list.end()) throw InputError("unknown fixture '" + name + "'");
    return *it;
}

}  // namespace

BraidedAlgebra make_fixture(const std::string& name, const FieldSpec& k) {
    const auto& info = lookup(braided_fixtures(), name);
    if (!fixture_defined(info, k)) throw PreconditionError(name + " is not defined over " + k.name());
    auto z2 = FiniteGroup::cyclic(2);
    auto z3 = FiniteGroup::cyclic(3);
    if (name == "z2_adjoint") return from_mcq(MCQ::conjugation(z2), k);
    if (name == "z3_adjoint") return from_mcq(MCQ::conjugation(z3), k);
    if (name == "klein_adjoint") return from_mcq(MCQ::conjugation(FiniteGroup::direct_product(z2, z2)), k);
    if (name == "s3_adjoint") return from_mcq(MCQ::conjugation(FiniteGroup::symmetric(3)), k);
    if (name == "mcq_z2_z2") return from_mcq(MCQ::trivial_union({z2, z2}), k);
    if (name == "heap_z2") return from_heap(z2, k);
    if (name == "heap_z3") return from_heap(z3, k);
    if (name == "trivial_m2") return trivial_braiding(matrix_algebra(2, k));
    if (name == "trivial_dual") return trivial_braiding(dual_numbers(k));
    if (name == "frobenius_z2") return braided_frobenius(group_hopf(z2, k));
    if (name == "frobenius_z3") return braided_frobenius(group_hopf(z3, k));
    throw InternalError("fixture '" + name + "' is registered but has no factory");
}

HopfAlgebra make_hopf_fixture(const std::string& name, const FieldSpec& k) {
    const auto& info = lookup(hopf_fixtures(), name);
    if (!fixture_defined(info, k)) throw PreconditionError(name + " is not defined over " + k.name());
    if (name == "hopf_z2") return group_hopf(FiniteGroup::cyclic(2), k);
    if (name == "hopf_z3") return group_hopf(FiniteGroup::cyclic(3), k);
    if (name == "hopf_s3") return group_hopf(FiniteGroup::symmetric(3), k);
    if (name == "hopf_dual") return dual_numbers_hopf(k);
    throw InternalError("fixture '" + name + "' is registered but has no factory");
}

}  // namespace ybh
