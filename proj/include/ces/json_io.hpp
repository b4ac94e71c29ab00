// JSON views of the result types, with stable key and element order.
#pragma once

#include <json.hpp>

#include "ces/agreement.hpp"
#include "ces/configurations.hpp"
#include "ces/session.hpp"

namespace ces {

using Json = nlohmann::ordered_json;

Json to_json(const EventSet& events);
Json to_json(const OrderingWitness& witness);
Json to_json(const AgreementResult& result);
Json to_json(const DutyReport& report);
Json to_json(const SessionLog& log);

}  // namespace ces
