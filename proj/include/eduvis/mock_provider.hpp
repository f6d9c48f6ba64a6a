#pragma once

#include <memory>

#include "eduvis/gateway.hpp"

namespace eduvis::gateway {

// Deterministic offline provider: answers by ModelRequest.format_hint with
// schema-valid agent records, extractable documents, and rating objects whose
// scores derive from the request digest. Same request, same reply, always —
// which is what makes recorded fixture runs byte-reproducible.
std::shared_ptr<ModelProvider> make_mock_provider();

}  // namespace eduvis::gateway
