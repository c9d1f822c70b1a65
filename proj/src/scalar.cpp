#include "ncspectrum/scalar.hpp"

#include <stdexcept>

namespace ncs {

Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    if (s.front() == '+') s.erase(0, 1);
    auto slash = s.find('/');
    auto digits_ok = [](std::string_view d) {
        if (d.empty()) return false;
        std::size_t start = d.front() == '-' ? 1 : 0;
        if (start == d.size()) return false;
        for (std::size_t k = start; k < d.size(); ++k)
            if (d[k] < '0' || d[k] > '9') return false;
        return true;
    };
    if (slash == std::string::npos) {
        if (!digits_ok(s)) throw std::invalid_argument("bad rational literal: " + std::string(text));
        return Rational(Integer(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!digits_ok(num) || !digits_ok(den) || den.front() == '-')
        throw std::invalid_argument("bad rational literal: " + std::string(text));
    Integer d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    Rational q(Integer(num), d);
    q.canonicalize();
    return q;
}

GaussianRational::GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

GaussianRational GaussianRational::inverse() const {
    Rational n = norm();
    if (sgn(n) == 0) throw std::domain_error("division by zero in Q(i)");
    return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (is_real() && o.is_real()) {
        re_ *= o.re_;
        return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b) {
    int c = cmp(a.re_, b.re_);
    if (c == 0) c = cmp(a.im_, b.im_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string GaussianRational::to_string() const {
    if (is_real()) return re_.get_str();
    std::string out;
    if (sgn(re_) != 0) out = re_.get_str();
    std::string coeff;
    if (im_ == 1)
        coeff = out.empty() ? "" : "+";
    else if (im_ == -1)
        coeff = "-";
    else {
        coeff = im_.get_str();
        if (!out.empty() && sgn(im_) > 0) coeff = "+" + coeff;
    }
    return out + coeff + "i";
}

GaussianRational GaussianRational::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (c != ' ') s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty scalar literal");
    if (s.back() != 'i') return {parse_rational(s), 0};
    std::string body = s.substr(0, s.size() - 1);
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if (body[k] == '+' || body[k] == '-') {
            split = k;
            break;
        }
    }
    std::string re_part = split == std::string::npos ? "" : body.substr(0, split);
    std::string im_part = split == std::string::npos ? body : body.substr(split);
    Rational im;
    if (im_part.empty() || im_part == "+")
        im = 1;
    else if (im_part == "-")
        im = -1;
    else
        im = parse_rational(im_part);
    Rational re = re_part.empty() ? Rational(0) : parse_rational(re_part);
    return {re, im};
}

}  // namespace ncs
