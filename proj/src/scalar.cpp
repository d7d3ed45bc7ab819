#include "qlogic/scalar.hpp"

#include <cctype>
#include <utility>

namespace qlogic {

namespace {

// (a + b*r)(c + d*r) with r^2 = m, as component pairs.
struct QPair {
    mpq_class rat, irr;
};

QPair qmul(const QPair& x, const QPair& y, long m) {
    return {x.rat * y.rat + m * (x.irr * y.irr), x.rat * y.irr + x.irr * y.rat};
}

} // namespace

long unify_radicands(long a, long b) {
    if (a == b) return a;
    if (a == 1) return b;
    if (b == 1) return a;
    throw FieldError("incompatible radicands " + std::to_string(a) + " and " + std::to_string(b));
}

void Scalar::normalize() {
    if (radicand_ == 1) {
        re_rat_ += re_irr_;
        im_rat_ += im_irr_;
        re_irr_ = 0;
        im_irr_ = 0;
    } else if (re_irr_ == 0 && im_irr_ == 0) {
        radicand_ = 1;
    }
}

Scalar Scalar::rational(mpq_class re, mpq_class im) {
    Scalar s;
    s.re_rat_ = std::move(re);
    s.im_rat_ = std::move(im);
    s.re_rat_.canonicalize();
    s.im_rat_.canonicalize();
    return s;
}

Scalar Scalar::of(mpq_class re_rat, mpq_class re_irr, mpq_class im_rat, mpq_class im_irr,
                  long radicand) {
    if (radicand < 1) throw FieldError("radicand must be a positive integer");
    Scalar s;
    s.re_rat_ = std::move(re_rat);
    s.re_irr_ = std::move(re_irr);
    s.im_rat_ = std::move(im_rat);
    s.im_irr_ = std::move(im_irr);
    s.re_rat_.canonicalize();
    s.re_irr_.canonicalize();
    s.im_rat_.canonicalize();
    s.im_irr_.canonicalize();
    s.radicand_ = radicand;
    s.normalize();
    return s;
}

Scalar Scalar::sqrt_radicand(long radicand) {
    return of(0, 1, 0, 0, radicand);
}

Scalar Scalar::imaginary_unit() {
    return rational(0, 1);
}

bool Scalar::is_zero() const {
    return re_rat_ == 0 && re_irr_ == 0 && im_rat_ == 0 && im_irr_ == 0;
}

bool Scalar::is_one() const {
    return re_rat_ == 1 && re_irr_ == 0 && im_rat_ == 0 && im_irr_ == 0;
}

Scalar Scalar::conj() const {
    Scalar s = *this;
    s.im_rat_ = -s.im_rat_;
    s.im_irr_ = -s.im_irr_;
    return s;
}

long Scalar::unify_radicand(const Scalar& a, const Scalar& b) {
    return unify_radicands(a.radicand_, b.radicand_);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    Scalar s;
    s.radicand_ = Scalar::unify_radicand(a, b);
    s.re_rat_ = a.re_rat_ + b.re_rat_;
    s.re_irr_ = a.re_irr_ + b.re_irr_;
    s.im_rat_ = a.im_rat_ + b.im_rat_;
    s.im_irr_ = a.im_irr_ + b.im_irr_;
    s.normalize();
    return s;
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    s.re_rat_ = -s.re_rat_;
    s.re_irr_ = -s.re_irr_;
    s.im_rat_ = -s.im_rat_;
    s.im_irr_ = -s.im_irr_;
    return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    return a + (-b);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    long m = Scalar::unify_radicand(a, b);
    QPair ar{a.re_rat_, a.re_irr_}, ai{a.im_rat_, a.im_irr_};
    QPair br{b.re_rat_, b.re_irr_}, bi{b.im_rat_, b.im_irr_};
    QPair re1 = qmul(ar, br, m), re2 = qmul(ai, bi, m);
    QPair im1 = qmul(ar, bi, m), im2 = qmul(ai, br, m);
    return Scalar::of(re1.rat - re2.rat, re1.irr - re2.irr, im1.rat + im2.rat, im1.irr + im2.irr,
                      m);
}

Scalar Scalar::norm_sq() const {
    return *this * conj();
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw FieldError("inverse of zero");
    // 1/z = conj(z) / (z conj z); the denominator n = p + q*r is real and
    // nonzero, with 1/n = (p - q*r) / (p^2 - m q^2).
    Scalar n = norm_sq();
    mpq_class p = n.re_rat_, q = n.re_irr_;
    mpq_class d = p * p - n.radicand_ * q * q;
    Scalar ninv = of(p / d, -q / d, 0, 0, n.radicand_);
    return conj() * ninv;
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    return a * b.inverse();
}

int Scalar::real_sign() const {
    if (!is_real()) throw PreconditionError("real_sign of a non-real scalar");
    int sp = sgn(re_rat_), sq = sgn(re_irr_);
    if (sq == 0) return sp;
    if (sp == 0) return sq;
    if (sp == sq) return sp;
    // p and q*sqrt(m) pull in opposite directions: compare p^2 with m q^2.
    mpq_class p2 = re_rat_ * re_rat_, mq2 = radicand_ * re_irr_ * re_irr_;
    if (p2 == mq2) return 0;
    return p2 > mq2 ? sp : sq;
}

const mpq_class& Scalar::as_rational() const {
    if (!is_rational()) throw PreconditionError("scalar is not rational: " + str());
    return re_rat_;
}

std::string Scalar::str() const {
    if (is_zero()) return "0";
    std::string out;
    auto append = [&out](const mpq_class& coeff, const char* suffix) {
        if (coeff == 0) return;
        mpq_class c = coeff;
        std::string sign = "+";
        if (c < 0) {
            sign = "-";
            c = -c;
        }
        if (!out.empty())
            out += sign;
        else if (sign == "-")
            out += "-";
        if (c == 1 && *suffix != '\0')
            out += suffix + 1; // drop the leading '*'
        else {
            out += c.get_str();
            out += suffix;
        }
    };
    append(re_rat_, "");
    append(re_irr_, "*r");
    append(im_rat_, "*i");
    append(im_irr_, "*r*i");
    return out;
}

namespace {

struct Term {
    mpq_class coeff{1};
    bool has_coeff = false;
    bool has_r = false;
    bool has_i = false;
};

} // namespace

Scalar Scalar::parse(std::string_view text, long radicand) {
    if (radicand < 1) throw FieldError("radicand must be a positive integer");
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty scalar literal");

    mpq_class re_rat = 0, re_irr = 0, im_rat = 0, im_irr = 0;
    size_t pos = 0;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            if (s[pos] == '-') sign = -1;
            ++pos;
        } else if (pos != 0) {
            throw ParseError("expected '+' or '-' in scalar literal '" + s + "'");
        }
        Term term;
        bool expect_factor = true;
        while (pos < s.size() && (expect_factor || s[pos] == '*')) {
            if (s[pos] == '*') {
                ++pos;
                expect_factor = true;
                continue;
            }
            expect_factor = false;
            if (s[pos] == 'r') {
                if (term.has_r) throw ParseError("repeated 'r' in term of '" + s + "'");
                term.has_r = true;
                ++pos;
            } else if (s[pos] == 'i') {
                if (term.has_i) throw ParseError("repeated 'i' in term of '" + s + "'");
                term.has_i = true;
                ++pos;
            } else if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
                if (term.has_coeff || term.has_r || term.has_i)
                    throw ParseError("misplaced number in term of '" + s + "'");
                size_t start = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                if (pos < s.size() && s[pos] == '/') {
                    ++pos;
                    size_t dstart = pos;
                    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                    if (pos == dstart) throw ParseError("missing denominator in '" + s + "'");
                }
                std::string lit = s.substr(start, pos - start);
                mpq_class q(lit);
                if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
                q.canonicalize();
                term.coeff = q;
                term.has_coeff = true;
            } else {
                throw ParseError(std::string("unexpected character '") + s[pos] + "' in scalar literal '" + s + "'");
            }
        }
        if (!term.has_coeff && !term.has_r && !term.has_i)
            throw ParseError("empty term in scalar literal '" + s + "'");
        mpq_class c = sign * term.coeff;
        if (term.has_r && term.has_i)
            im_irr += c;
        else if (term.has_r)
            re_irr += c;
        else if (term.has_i)
            im_rat += c;
        else
            re_rat += c;
    }
    return of(std::move(re_rat), std::move(re_irr), std::move(im_rat), std::move(im_irr), radicand);
}

} // namespace qlogic
