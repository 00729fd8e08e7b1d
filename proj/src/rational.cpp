#include "cliff/rational.hpp"

#include <stdexcept>

namespace cliff {

GaussRational GaussRational::inverse() const {
  Rational norm = re * re + im * im;
  if (sgn(norm) == 0) throw std::domain_error("division by zero Gaussian rational");
  return {re / norm, -im / norm};
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

std::string to_string(const Rational& x) {
  return x.get_str();
}

std::string to_string(const GaussRational& x) {
  if (is_zero(x.im)) return x.re.get_str();
  std::string im_part;
  if (x.im == 1)
    im_part = "i";
  else if (x.im == -1)
    im_part = "-i";
  else
    im_part = x.im.get_str() + "i";
  if (is_zero(x.re)) return im_part;
  if (im_part.front() == '-') return x.re.get_str() + im_part;
  return x.re.get_str() + "+" + im_part;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  auto dot = text.find('.');
  if (dot == std::string::npos) {
    Rational r;
    if (r.set_str(text, 10) != 0) throw std::invalid_argument("bad rational literal: " + text);
    r.canonicalize();
    if (sgn(r.get_den()) == 0) throw std::invalid_argument("zero denominator: " + text);
    return r;
  }
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  std::string den = "1" + std::string(text.size() - dot - 1, '0');
  Rational r;
  if (r.set_str(digits + "/" + den, 10) != 0) throw std::invalid_argument("bad decimal literal: " + text);
  r.canonicalize();
  return r;
}

}  // namespace cliff
