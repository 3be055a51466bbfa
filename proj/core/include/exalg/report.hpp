#pragma once

#include "exalg/forms.hpp"
#include "exalg/graded.hpp"

#include <string>
#include <vector>

namespace exalg {

/// One verified identity: a stable name, the owning module, pass/fail, and a
/// human-readable account of the nonzero residual entries (empty when ok).
struct CheckItem {
    std::string module_name;
    std::string check;
    bool ok = true;
    std::string detail;
};

struct CheckReport {
    std::vector<CheckItem> items;

    bool ok() const {
        for (const auto& it : items)
            if (!it.ok) return false;
        return true;
    }
    void add(std::string module_name, std::string check, bool ok, std::string detail = "");
    /// ok iff the residual map is exactly zero; detail lists nonzero entries.
    void add_residual(std::string module_name, std::string check, const GradedMap& residual);
    void add_residual(std::string module_name, std::string check, const FormOp& residual);
    void add_residual(std::string module_name, std::string check, const Series& residual);
    void merge(const CheckReport& o) {
        items.insert(items.end(), o.items.begin(), o.items.end());
    }
    std::string summary() const;
};

/// First nonzero entries of a map, rendered compactly.
std::string residual_detail(const GradedMap& m, std::size_t max_entries = 6);

} // namespace exalg
