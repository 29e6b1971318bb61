#pragma once

#include <string>
#include <vector>

#include "optic/flowers.hpp"

namespace optic::demos {

// Text + postal-record accessors: a prism from free-form text into a
// street/code/city record, composed with field lenses.
std::string address_demo();

// Traversal over a mailing list composed with an email-domain lens.
std::string mail_demo();

enum class IrisAgg { Mean, Max };

// View, classify and aggregate over the bundled iris rows. The list
// lens and the kaleidoscope compose into a kaleidoscope that folds all
// rows and classifies the folded measurements.
std::string iris_demo(const std::vector<flowers::Flower>& rows, IrisAgg agg);

// Measurement values rendered with up to three decimals ("5.843",
// "4.9", "3.0").
std::string format_measurement(double x);

} // namespace optic::demos
