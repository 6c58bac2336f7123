#pragma once

#include "degenet/algorithm_metrics.hpp"
#include "degenet/io.hpp"
#include "degenet/layer_metrics.hpp"
#include "degenet/path_metrics.hpp"
#include "degenet/paths.hpp"
#include "degenet/substitution_metrics.hpp"

namespace degenet {

// JSON encodings used by the CLI. Numbers go through round_report_value;
// undefined scores are null.

Json to_json(const Path& path);
Json to_json(const DwprReport& report);
Json to_json(const FssReport& report);
Json to_json(const ArqReport& report);
Json to_json(const MldiReport& report);

}  // namespace degenet
