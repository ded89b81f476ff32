#include "lierep/rat.hpp"

namespace lierep {

std::optional<Rat> Rat::parse(const std::string& s) {
    if (s.empty()) return std::nullopt;
    std::size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            mpz_class n(s);
            return Rat(n);
        }
        std::string ns = s.substr(0, slash), ds = s.substr(slash + 1);
        if (ns.empty() || ds.empty()) return std::nullopt;
        mpz_class n(ns), d(ds);
        if (d == 0) return std::nullopt;
        return Rat(n, d);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

mpz_class squarefree_part(const mpz_class& n) {
    if (n == 0) return 0;
    mpz_class m = ::abs(n);
    mpz_class sf = n < 0 ? -1 : 1;
    mpz_class d = 2;
    while (d * d <= m) {
        unsigned e = 0;
        while (m % d == 0) {
            m /= d;
            ++e;
        }
        if (e % 2 == 1) sf *= d;
        d += (d == 2) ? 1 : 2;
    }
    sf *= m;
    return sf;
}

std::variant<Rat, ExtensionNeeded> sqrt_exact(const Rat& r) {
    if (r.sgn() <= 0) throw Error(ErrorCode::NonPositive, "sqrt_exact: argument must be positive");
    mpz_class n = r.num(), d = r.den();
    if (mpz_perfect_square_p(n.get_mpz_t()) && mpz_perfect_square_p(d.get_mpz_t())) {
        mpz_class sn, sd;
        mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
        mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
        return Rat(sn, sd);
    }
    // r = (n d) / d^2, so the extension is generated by sqrt of squarefree(n d)
    return ExtensionNeeded{Rat(squarefree_part(n * d))};
}

const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::ZeroDenominator: return "ZeroDenominator";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::NonPositive: return "NonPositive";
        case ErrorCode::SizeMismatch: return "SizeMismatch";
        case ErrorCode::AmbientMismatch: return "AmbientMismatch";
        case ErrorCode::ZeroVector: return "ZeroVector";
        case ErrorCode::NotNilpotent: return "NotNilpotent";
        case ErrorCode::NotSelfConjugate: return "NotSelfConjugate";
        case ErrorCode::EigenvalueOutsideField: return "EigenvalueOutsideField";
        case ErrorCode::NotSemisimpleOperator: return "NotSemisimpleOperator";
        case ErrorCode::NotCommuting: return "NotCommuting";
        case ErrorCode::NotClosed: return "NotClosed";
        case ErrorCode::NotCartan: return "NotCartan";
        case ErrorCode::DegenerateRoot: return "DegenerateRoot";
        case ErrorCode::NonTerminating: return "NonTerminating";
        case ErrorCode::WeightNotInOrbit2: return "WeightNotInOrbit2";
        case ErrorCode::NotScalar: return "NotScalar";
        case ErrorCode::ZeroD: return "ZeroD";
        case ErrorCode::ExhaustionFailure: return "ExhaustionFailure";
        case ErrorCode::NotDominant: return "NotDominant";
        case ErrorCode::DiscMismatch: return "DiscMismatch";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::ValidationError: return "ValidationError";
    }
    return "Unknown";
}

}  // namespace lierep
