// report.hpp — Per-gadget verification reports: named residuals against the
// closed forms, with unspecified identity offsets recorded rather than asserted.

#pragma once

#include "gadgetforge/core/json_io.hpp"
#include "gadgetforge/sw/gadget.hpp"

#include <map>
#include <string>

namespace gadgetforge::gadgets {

using sw::ConditionItem;
using sw::ConditionReport;

struct GadgetReport {
    std::string gadget;
    int d = 0;
    std::map<std::string, double> params;
    ConditionReport checks;
    Matrix effective;             // computed effective operator (logical basis), when applicable
    Matrix expected;              // closed form it is compared against
    double identity_offset = 0;  // recorded, never asserted
    double tolerance = 0;
    std::map<std::string, double> extra;  // derived constants worth keeping (scales, coefficients)

    bool pass() const { return checks.pass; }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["gadget"] = gadget;
        j["d"] = d;
        j["params"] = params;
        j["tolerance"] = tolerance;
        j["pass"] = pass();
        nlohmann::json items = nlohmann::json::array();
        for (const ConditionItem& it : checks.items)
            items.push_back({{"id", it.name}, {"residual", it.residual}, {"tol", it.tolerance}, {"pass", it.pass}});
        j["checks"] = std::move(items);
        j["identity_offset"] = identity_offset;
        if (effective.size() > 0) j["effective"] = io::matrix_to_json(effective);
        if (expected.size() > 0) j["expected"] = io::matrix_to_json(expected);
        if (!extra.empty()) j["derived"] = extra;
        return j;
    }
};

}  // namespace gadgetforge::gadgets
