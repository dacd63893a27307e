#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qlab/habiro.hpp"

namespace qlab {

/// Ingested cyclotomic coefficients C_{K_p,n}(q) of a twist knot K_p.
///
/// File format: a header line "p=<integer>", then line n (0-based) holding
/// C_{K_p,n}(q) as space-separated "exponent:coefficient" pairs.
struct TwistKnotData {
    long p = 0;
    std::vector<LaurentPoly> cyclotomic;

    static TwistKnotData load(std::istream& in, const std::string& origin = "<stream>");
    static TwistKnotData load_file(const std::string& path);
};

/// Habiro element with level-n term C_{K_p,n}(q) (q)_n (q^{-1})_n.
/// Levels beyond the ingested data raise DataError naming the missing index.
HabiroElement twist_knot_element(const TwistKnotData& d);

} // namespace qlab
