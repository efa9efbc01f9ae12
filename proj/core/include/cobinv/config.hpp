#ifndef COBINV_CONFIG_HPP
#define COBINV_CONFIG_HPP

#include <string>

#include "cobinv/errors.hpp"

namespace cobinv {

// Global truncation window. Every ring in sight is infinite; all computations
// happen in the bounded window below, exactly.
struct Config {
    int degree_bound = 8;   // D: maximum total |degree|
    int series_order = 10;  // T: truncation order for power series
    int catalog_max = 8;    // largest n for the catalog generators
    std::string output = "json";

    static Config with_degree(int d) {
        Config c;
        c.degree_bound = d;
        c.series_order = d + 2;
        c.catalog_max = d;
        return c;
    }

    void validate() const {
        if (degree_bound < 1) throw Error("degree bound must be >= 1");
        if (series_order < degree_bound + 1)
            throw Error("series order must be at least degree bound + 1");
        if (catalog_max > 2 * degree_bound + 1)
            throw Error("catalog bound exceeds what the degree window supports");
    }
};

}  // namespace cobinv

#endif
