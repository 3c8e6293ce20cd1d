#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ybh/braided.hpp"
#include "ybh/hopf.hpp"

namespace ybh {

struct FixtureInfo {
    std::string name;
    std::string description;
    std::size_t dim;
    // Characteristic the fixture is restricted to, if any.
    std::optional<std::uint32_t> only_characteristic;
};

// Braided algebra fixtures: adjoint group algebras, MCQ, heaps, trivial braidings, Frobenius.
const std::vector<FixtureInfo>& braided_fixtures();
// Hopf algebra fixtures.
const std::vector<FixtureInfo>& hopf_fixtures();

bool fixture_defined(const FixtureInfo& f, const FieldSpec& k);
BraidedAlgebra make_fixture(const std::string& name, const FieldSpec& k);
HopfAlgebra make_hopf_fixture(const std::string& name, const FieldSpec& k);

}  // namespace ybh
