#include "kroncoeff/report.hpp"

namespace kroncoeff {

nlohmann::ordered_json make_report(nlohmann::ordered_json input, std::string result,
                                   std::string method, int64_t millis) {
    nlohmann::ordered_json out;
    out["input"] = std::move(input);
    out["result"] = std::move(result);
    out["method"] = std::move(method);
    out["millis"] = millis;
    return out;
}

} // namespace kroncoeff
