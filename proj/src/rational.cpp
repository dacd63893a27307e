#include "qlab/rational.hpp"

#include <mutex>
#include <vector>

#include "qlab/errors.hpp"

namespace qlab {

const Int& factorial(long n) {
    if (n < 0) throw DomainError("factorial: negative argument");
    static std::vector<Int> cache{Int(1)};
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    while ((long)cache.size() <= n)
        cache.push_back(cache.back() * (long)cache.size());
    return cache[(size_t)n];
}

Rat parse_rational(const std::string& s) {
    if (s.empty()) throw DataError("parse_rational: empty string");
    try {
        Rat q(s);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw DataError("parse_rational: malformed rational '" + s + "'");
    }
}

std::string rational_str(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

} // namespace qlab
