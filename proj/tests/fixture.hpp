#pragma once

#include <string>

#include "degenet/model.hpp"

namespace degenet::fixtures {

// Four-node fixture: s-a-d over radio, s-b-d over optical, s-d acoustic.
inline Network fixture_network() {
  return Network({"s", "a", "b", "d"}, {
                                           {"s", "a", "radio", 1.0, 10.0},
                                           {"a", "d", "radio", 1.0, 10.0},
                                           {"s", "b", "optical", 2.0, 20.0},
                                           {"b", "d", "optical", 2.0, 20.0},
                                           {"s", "d", "acoustic", 5.0, 5.0},
                                       });
}

inline const char* kFixtureJson = R"({
  "nodes": [{"id": "s"}, {"id": "a"}, {"id": "b"}, {"id": "d"}],
  "edges": [
    {"u": "s", "v": "a", "mode": "radio", "latency_ms": 1.0, "bandwidth_mbps": 10.0},
    {"u": "a", "v": "d", "mode": "radio", "latency_ms": 1.0, "bandwidth_mbps": 10.0},
    {"u": "s", "v": "b", "mode": "optical", "latency_ms": 2.0, "bandwidth_mbps": 20.0},
    {"u": "b", "v": "d", "mode": "optical", "latency_ms": 2.0, "bandwidth_mbps": 20.0},
    {"u": "s", "v": "d", "mode": "acoustic", "latency_ms": 5.0, "bandwidth_mbps": 5.0}
  ]
})";

}  // namespace degenet::fixtures
