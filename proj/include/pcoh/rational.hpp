#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace pcoh {

struct parse_error : std::runtime_error {
    std::size_t position;
    parse_error(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}
};

struct division_by_zero : std::domain_error {
    division_by_zero() : std::domain_error("division by zero in Q(i)") {}
};

/// Element of the field Q(i): re + im*i with exact rational parts.
/// mpq_class keeps both parts reduced with positive denominator, so
/// structural equality is equality of canonical forms.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long v) : re_(v), im_(0) {}
    GaussianRational(mpq_class re) : re_(std::move(re)), im_(0) { re_.canonicalize(); }
    GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }
    static GaussianRational i() { return GaussianRational(0, 1); }
    GaussianRational(long re, long im) : re_(re), im_(im) {}

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational conj() const { return GaussianRational(re_, -im_); }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a.re_ - b.re_, a.im_ - b.im_);
    }
    GaussianRational operator-() const { return GaussianRational(-re_, -im_); }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
    }
    GaussianRational inv() const {
        if (is_zero()) throw division_by_zero();
        mpq_class norm = re_ * re_ + im_ * im_;
        return GaussianRational(re_ / norm, -im_ / norm);
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        return a * b.inv();
    }

    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
    GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

private:
    mpq_class re_, im_;
};

namespace detail {

inline std::string rat_to_string(const mpq_class& q) {
    return q.get_str();
}

// One unsigned rational: int ("/" posint)?  The leading sign is handled by
// the caller so "3/2+1/2i" splits cleanly on the middle sign.
inline mpq_class parse_rat(const std::string& text, std::size_t& pos) {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw parse_error("expected digit", pos);
    std::string num = text.substr(start, pos - start);
    std::string den = "1";
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        std::size_t dstart = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == dstart) throw parse_error("expected denominator digits", pos);
        den = text.substr(dstart, pos - dstart);
        if (mpz_class(den) == 0) throw parse_error("zero denominator", dstart);
    }
    mpq_class q(num + "/" + den);
    q.canonicalize();
    return q;
}

}  // namespace detail

/// Canonical text form: real part first, then signed imaginary part with a
/// mandatory trailing 'i'; /1 denominators and zero parts omitted; plain "0"
/// when both parts vanish; a unit imaginary part prints as bare "i".
inline std::string serialize_gq(const GaussianRational& x) {
    if (x.is_zero()) return "0";
    std::string out;
    if (x.re() != 0 || x.im() == 0) out = detail::rat_to_string(x.re());
    if (x.im() != 0) {
        std::string part;
        if (x.im() == 1)
            part = "i";
        else if (x.im() == -1)
            part = "-i";
        else
            part = detail::rat_to_string(x.im()) + "i";
        if (!out.empty() && part[0] != '-') out += "+";
        out += part;
    }
    return out;
}

/// Inverse of serialize_gq; accepts any string of the grammar
///   [sign] term [sign term] with term = rat ["i"] | "i"
/// where at most one term carries the trailing 'i'.
inline GaussianRational parse_gq(const std::string& text) {
    std::size_t pos = 0;
    mpq_class re = 0, im = 0;
    bool have_re = false, have_im = false;
    if (text.empty()) throw parse_error("empty input", 0);
    while (pos < text.size()) {
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            if (pos > 0 && !(have_re || have_im)) throw parse_error("unexpected sign", pos);
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (pos > 0) {
            throw parse_error("expected sign between terms", pos);
        }
        mpq_class mag;
        bool imag;
        if (pos < text.size() && text[pos] == 'i') {
            mag = 1;
            imag = true;
            ++pos;
        } else {
            mag = detail::parse_rat(text, pos);
            imag = pos < text.size() && text[pos] == 'i';
            if (imag) ++pos;
        }
        if (imag) {
            if (have_im) throw parse_error("duplicate imaginary part", pos);
            im = sign * mag;
            have_im = true;
        } else {
            if (have_re || have_im) throw parse_error("real part after imaginary part", pos);
            re = sign * mag;
            have_re = true;
        }
        if ((have_re ? 1 : 0) + (have_im ? 1 : 0) == 2) break;
    }
    if (pos != text.size()) throw parse_error("trailing characters", pos);
    return GaussianRational(re, im);
}

}  // namespace pcoh
