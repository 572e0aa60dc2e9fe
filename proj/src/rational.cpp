#include "grpi/rational.hpp"

#include <cctype>
#include <ostream>

#include "grpi/errors.hpp"

namespace grpi {

Rational::Rational(long num, long den) {
    if (den == 0) throw InputError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    // Strict shape check first; mpq_set_str is laxer than the file format allows.
    std::size_t i = 0;
    auto digits = [&](std::size_t from) {
        std::size_t j = from;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        return j;
    };
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    std::size_t after_num = digits(i);
    if (after_num == i) throw InputError("malformed rational '" + text + "'");
    i = after_num;
    if (i < text.size()) {
        if (text[i] != '/') throw InputError("malformed rational '" + text + "'");
        std::size_t after_den = digits(i + 1);
        if (after_den == i + 1 || after_den != text.size())
            throw InputError("malformed rational '" + text + "'");
    }
    mpq_class v;
    const std::string body = text[0] == '+' ? text.substr(1) : text;
    if (v.set_str(body, 10) != 0) throw InputError("malformed rational '" + text + "'");
    if (v.get_den() == 0) throw InputError("rational with zero denominator: '" + text + "'");
    v.canonicalize();
    return Rational(std::move(v));
}

std::string Rational::str() const { return v_.get_str(); }
std::string Rational::num_str() const { return v_.get_num().get_str(); }
std::string Rational::den_str() const { return v_.get_den().get_str(); }

Rational Rational::inv() const {
    if (is_zero()) throw InputError("division by zero");
    return Rational(mpq_class(1) / v_);
}

long Rational::to_long() const {
    if (!is_integer() || !v_.get_num().fits_slong_p())
        throw CheckError("value not an integer fitting long: " + str());
    return v_.get_num().get_si();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw InputError("division by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}
