#include "exalg/report.hpp"

#include <sstream>

namespace exalg {

void CheckReport::add(std::string module_name, std::string check, bool ok, std::string detail) {
    items.push_back({std::move(module_name), std::move(check), ok, std::move(detail)});
}

void CheckReport::add_residual(std::string module_name, std::string check,
                               const GradedMap& residual) {
    bool ok = residual.is_zero();
    add(std::move(module_name), std::move(check), ok, ok ? "" : residual_detail(residual));
}

void CheckReport::add_residual(std::string module_name, std::string check,
                               const FormOp& residual) {
    bool ok = residual.is_zero();
    std::string detail;
    if (!ok) {
        for (const auto& [mask, m] : residual.components()) {
            if (m.is_zero()) continue;
            std::ostringstream os;
            os << "[mask " << mask << "] " << residual_detail(m, 3);
            detail += os.str();
        }
    }
    add(std::move(module_name), std::move(check), ok, std::move(detail));
}

void CheckReport::add_residual(std::string module_name, std::string check,
                               const Series& residual) {
    bool ok = residual.is_zero();
    add(std::move(module_name), std::move(check), ok, ok ? "" : residual.str());
}

std::string CheckReport::summary() const {
    std::ostringstream os;
    for (const auto& it : items) {
        os << (it.ok ? "PASS" : "FAIL") << "  " << it.module_name << "/" << it.check;
        if (!it.ok && !it.detail.empty()) os << "  [" << it.detail << "]";
        os << "\n";
    }
    return os.str();
}

std::string residual_detail(const GradedMap& m, std::size_t max_entries) {
    std::ostringstream os;
    std::size_t shown = 0;
    for (std::size_t r = 0; r < m.rows() && shown < max_entries; ++r)
        for (std::size_t c = 0; c < m.cols() && shown < max_entries; ++c) {
            if (m.at(r, c).is_zero()) continue;
            if (shown) os << "; ";
            os << m.target()->label(r) << "<-" << m.source()->label(c) << "="
               << m.at(r, c).str();
            ++shown;
        }
    return os.str();
}

} // namespace exalg
