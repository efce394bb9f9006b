#include "mdf/report.hpp"

#include <sstream>

#include <json.hpp>

namespace mdf {

std::string to_csv(const std::vector<TableRow>& rows) {
    std::ostringstream out;
    out << "d,length,dimension,delta,fp,regularity,degree\n";
    for (const auto& r : rows) {
        out << r.d << ',' << r.length << ',' << r.dimension << ',' << r.delta << ',';
        if (r.fp) out << *r.fp;
        out << ',' << r.regularity << ',' << r.degree << '\n';
    }
    return out.str();
}

std::string to_json(const std::vector<TableRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json rec{{"d", r.d},
                           {"length", r.length},
                           {"dimension", r.dimension},
                           {"delta", r.delta},
                           {"regularity", r.regularity},
                           {"degree", r.degree}};
        if (r.fp)
            rec["fp"] = *r.fp;
        else
            rec["fp"] = nullptr;
        arr.push_back(std::move(rec));
    }
    return arr.dump(2) + "\n";
}

}  // namespace mdf
