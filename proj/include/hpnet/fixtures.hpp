#pragma once

#include <string>

#include "hpnet/hierarchy.hpp"

namespace hpnet {

/// Bundled demo scenario: a remote-care subscription process. The root net
/// runs a refinable HealthService, fans out to accounting and specialist
/// review with a confirm/adjust choice, and finalizes billing and insurance
/// in parallel. HealthService refines into sensor acquisition (physiological,
/// environmental, subjective) in parallel, coronary diagnosis alongside a
/// medical-record read, an assessment, and an urgent/normal choice between an
/// alarm path (locate, alert) and a guidance path. Timing windows are
/// illustrative.
HierarchicalNet healthcare_fixture();

/// The same scenario as canonical DSL text (what healthcare_fixture parses).
const std::string& healthcare_fixture_text();

}  // namespace hpnet
