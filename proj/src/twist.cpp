#include "qlab/twist.hpp"

#include <fstream>
#include <memory>
#include <sstream>

#include "qlab/errors.hpp"

namespace qlab {

TwistKnotData TwistKnotData::load(std::istream& in, const std::string& origin) {
    TwistKnotData d;
    std::string line;
    if (!std::getline(in, line) || line.rfind("p=", 0) != 0)
        throw DataError(origin + ": missing 'p=<integer>' header line");
    try {
        d.p = std::stol(line.substr(2));
    } catch (const std::exception&) {
        throw DataError(origin + ": malformed twist parameter '" + line + "'");
    }
    if (d.p == 0) throw DataError(origin + ": twist parameter p must be nonzero");
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        d.cyclotomic.push_back(LaurentPoly::parse_pairs(line));
    }
    return d;
}

TwistKnotData TwistKnotData::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("twist data: cannot open '" + path + "'");
    return load(in, path);
}

HabiroElement twist_knot_element(const TwistKnotData& d) {
    // (q)_n (q^{-1})_n = prod_{j<=n} phi(q^j) for phi = -q^{-1}(1-q)^2
    SumProductSpec s;
    s.eps = -1;
    s.c = -1;
    s.c_r[1] = 2;
    auto data = std::make_shared<TwistKnotData>(d);
    LevelMultiplier m;
    m.poly = [data](long n) {
        if (n < 0 || (size_t)n >= data->cyclotomic.size())
            throw DataError("twist_knot_element: level " + std::to_string(n) +
                            " beyond ingested data (have " +
                            std::to_string(data->cyclotomic.size()) + " levels, p=" +
                            std::to_string(data->p) + ")");
        return data->cyclotomic[(size_t)n];
    };
    return HabiroElement::from_spec_mult(s, std::move(m), "K_" + std::to_string(d.p));
}

} // namespace qlab
