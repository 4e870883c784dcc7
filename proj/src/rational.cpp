#include "cpchart/rational.hpp"

#include <stdexcept>

namespace cpchart {

GaussRational& GaussRational::operator/=(const GaussRational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero coefficient");
    Rational norm = o.re * o.re + o.im * o.im;
    Rational r = (re * o.re + im * o.im) / norm;
    Rational i = (im * o.re - re * o.im) / norm;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

namespace {

std::string rational_str(const Rational& r, bool imaginary) {
    // "3i/2" keeps the i attached to the numerator so the string survives a
    // round trip through the parser ("3/2i" would read as 3/(2i)).
    std::string num = r.get_num().get_str();
    std::string out = num;
    if (imaginary) {
        if (out == "1")
            out = "i";
        else if (out == "-1")
            out = "-i";
        else
            out += "i";
    }
    if (r.get_den() != 1) out += "/" + r.get_den().get_str();
    return out;
}

}  // namespace

std::string to_string(const GaussRational& c) {
    if (c.is_zero()) return "0";
    if (c.im == 0) return rational_str(c.re, false);
    if (c.re == 0) return rational_str(c.im, true);
    std::string out = "(" + rational_str(c.re, false);
    if (c.im > 0)
        out += "+" + rational_str(c.im, true);
    else
        out += "-" + rational_str(-c.im, true);
    return out + ")";
}

}  // namespace cpchart
