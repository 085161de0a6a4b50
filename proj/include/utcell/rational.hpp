#ifndef UTCELL_RATIONAL_HPP
#define UTCELL_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace utcell {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rational_from_string(const std::string& text) {
    try {
        Rational q(text);
        q.canonicalize();
        if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
        return q;
    } catch (const std::exception&) {
        throw std::invalid_argument("rational_from_string: cannot parse '" + text + "'");
    }
}

inline std::string rational_to_string(const Rational& q) {
    return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

struct eval_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace utcell

#endif
