#include "exalg/scalar.hpp"

namespace exalg {

Rational Rational::parse(const std::string& raw) {
    const std::string s = (!raw.empty() && raw[0] == '+') ? raw.substr(1) : raw;
    if (s.empty()) throw ScalarError("Rational::parse: empty string");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt n(s.substr(0, slash));
        BigInt d(s.substr(slash + 1));
        if (d == 0) throw ScalarError("Rational::parse: zero denominator in \"" + s + "\"");
        return Rational(std::move(n), std::move(d));
    } catch (const ScalarError&) {
        throw;
    } catch (const std::exception&) {
        throw ScalarError("Rational::parse: malformed rational \"" + s + "\"");
    }
}

std::string Rational::str() const {
    std::string s = num().str();
    if (den() != 1) s += "/" + den().str();
    return s;
}

Scalar Scalar::parse(const std::string& s) {
    if (s.empty()) throw ScalarError("Scalar::parse: empty string");
    // Split  a+b*i / a-b*i  at the sign separating the two parts (not at index 0).
    auto strip = [](std::string t) -> Scalar {
        if (t == "i") return Scalar::i();
        if (t == "-i") return -Scalar::i();
        if (t == "+i") return Scalar::i();
        if (t.size() > 2 && t.substr(t.size() - 2) == "*i")
            return Scalar(Rational(0), Rational::parse(t.substr(0, t.size() - 2)));
        if (t.size() > 1 && t.back() == 'i')
            return Scalar(Rational(0), Rational::parse(t.substr(0, t.size() - 1)));
        return Scalar(Rational::parse(t));
    };
    for (size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '/' && s[k - 1] != '+' && s[k - 1] != '-') {
            std::string head = s.substr(0, k);
            std::string tail = s.substr(k);
            // Only split when the tail is the imaginary part.
            if (tail.find('i') != std::string::npos)
                return strip(head) + strip(tail);
            break;
        }
    }
    return strip(s);
}

std::string Scalar::str() const {
    if (im_.is_zero()) return re_.str();
    std::string imp = im_.str() + "*i";
    if (im_ == Rational(1)) imp = "i";
    if (im_ == Rational(-1)) imp = "-i";
    if (re_.is_zero()) return imp;
    if (imp[0] == '-') return re_.str() + imp;
    return re_.str() + "+" + imp;
}

} // namespace exalg
