#include "lierep/scalar.hpp"

namespace lierep {

std::string GaussRat::str() const {
    if (is_zero()) return "0";
    if (im_.is_zero()) return re_.str();
    std::string imtxt = im_.abs().str() + "i";
    if (re_.is_zero()) return (im_.sgn() < 0 ? "-" : "") + imtxt;
    return re_.str() + (im_.sgn() < 0 ? "-" : "+") + imtxt;
}

std::optional<GaussRat> GaussRat::parse(const std::string& s) {
    if (s.empty()) return std::nullopt;
    if (s.back() != 'i') {
        auto re = Rat::parse(s);
        if (!re) return std::nullopt;
        return GaussRat(*re);
    }
    // split off the trailing imaginary term: scan for the sign that separates
    // the real part, skipping a leading sign
    std::string body = s.substr(0, s.size() - 1);
    if (body.empty()) return GaussRat(Rat(0), Rat(1));
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if (body[k] == '+' || body[k] == '-') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos || split == 0) {
        std::string imtxt = body;
        if (imtxt == "-") imtxt = "-1";
        else if (imtxt == "+") imtxt = "1";
        auto im = Rat::parse(imtxt);
        if (!im) return std::nullopt;
        return GaussRat(Rat(0), *im);
    }
    auto re = Rat::parse(body.substr(0, split));
    std::string imtxt = body.substr(split);
    if (imtxt == "-") imtxt = "-1";
    else if (imtxt == "+") imtxt = "1";
    else if (imtxt[0] == '+') imtxt = imtxt.substr(1);
    auto im = Rat::parse(imtxt);
    if (!re || !im) return std::nullopt;
    return GaussRat(*re, *im);
}

std::string QuadExt::str() const {
    if (v_.is_zero()) return u_.str();
    return "(" + u_.str() + ")+(" + v_.str() + ")*rt(" + disc_.str() + ")";
}

}  // namespace lierep
