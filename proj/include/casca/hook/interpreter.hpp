#pragma once

#include "casca/bus/envelope.hpp"
#include "casca/hook/hook_config.hpp"
#include "casca/store/point.hpp"

#include <string>
#include <variant>

namespace casca::hook {

struct Skipped {
    std::string reason;
};

struct InterpretError {
    std::string reason;
};

using InterpretResult = std::variant<store::TelemetryPoint, Skipped, InterpretError>;

/// Maps one envelope to a storable point. Total: never throws for any payload.
///
/// Numbers map directly, booleans map to 1.0/0.0. Payload keys without a
/// mapping are discarded. When a mapped value is missing or non-numeric the
/// envelope is skipped if `drop_unmapped`; otherwise a non-numeric value is an
/// error and a missing one is left out (an error if no field remains).
InterpretResult interpret(const HookConfig& config, const bus::Envelope& envelope);

}  // namespace casca::hook
