#include "weilrep/text.hpp"

#include <cctype>

namespace wr {

std::string to_string(const Rat& r) { return r.str(); }
std::string to_string(const GaussQ& q) { return q.str(); }

std::string to_string(const RealChar& c) {
    if (c.s == GaussQ{}) return c.eps ? "w" : "1";
    std::string body = "nu^{" + c.s.str() + "}";
    return c.eps ? "w*" + body : body;
}

std::string to_string(const IrredWR& r) {
    if (r.is_one_dim()) return to_string(r.one_dim());
    const CplxChar& t = r.two_dim();
    if (t.mu + t.nu == GaussQ{} && t.mu.is_real()) {
        long long l = (t.mu - t.nu).re.num() + 1;
        return "D{" + std::to_string(l) + "}";
    }
    return "Ind{" + t.mu.str() + "," + t.nu.str() + "}";
}

std::string to_string(const VirtualRep& v) {
    if (v.empty()) return "0";
    std::string out;
    for (auto& [rep, m] : v.summands()) {
        if (!out.empty()) out += " + ";
        if (m != 1) out += std::to_string(m) + "*";
        out += to_string(rep);
    }
    return out;
}

std::string to_string(const Segment& s) {
    if (s.is_point()) {
        std::string out = "[" + s.low.str() + "]";
        if (s.point_parity && *s.point_parity == 1) out += "+sgn";
        return out;
    }
    return "[" + s.low.str() + "," + s.high.str() + "]";
}

std::string to_string(const InducedFactor& f) {
    if (f.is_char()) return to_string(RealChar(f.as_char().eps, f.as_char().s));
    return to_string(seg_of(f));
}

std::string to_string(const std::vector<InducedFactor>& fs) {
    std::string out;
    for (const auto& f : fs) {
        if (!out.empty()) out += " x ";
        out += to_string(f);
    }
    return out;
}

std::string to_string(const StandardModule& m) { return to_string(m.factors); }

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool at_end() {
        skip_ws();
        return pos_ >= s_.size();
    }

    std::size_t pos() const { return pos_; }
    void rewind(std::size_t p) { pos_ = p; }

    bool try_consume(const std::string& tok) {
        skip_ws();
        if (s_.compare(pos_, tok.size(), tok) == 0) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }

    void expect(const std::string& tok) {
        if (!try_consume(tok)) throw parse_error(pos_, "'" + tok + "'");
    }

    [[noreturn]] void fail(const std::string& expected) {
        throw parse_error(pos_, expected);
    }

    long long integer() {
        skip_ws();
        std::size_t start = pos_;
        bool neg = pos_ < s_.size() && s_[pos_] == '-';
        if (neg) ++pos_;
        std::size_t digits = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (pos_ == digits) {
            pos_ = start;
            fail("integer");
        }
        return std::stoll(s_.substr(start, pos_ - start));
    }

    Rat rat() {
        long long n = integer();
        std::size_t save = pos_;
        if (try_consume("/")) {
            skip_ws();
            if (pos_ < s_.size() &&
                std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                std::size_t dpos = pos_;
                long long den = integer();
                if (den == 0) throw parse_error(dpos, "nonzero denominator");
                return Rat(n, den);
            }
            rewind(save); // the '/' belonged to something else
        }
        return Rat(n);
    }

    GaussQ gauss() {
        Rat re = rat();
        std::size_t save = pos_;
        skip_ws();
        if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
            bool neg = s_[pos_] == '-';
            ++pos_;
            skip_ws();
            if (pos_ < s_.size() &&
                (std::isdigit(static_cast<unsigned char>(s_[pos_])) ||
                 s_[pos_] == '-')) {
                Rat im = rat();
                if (try_consume("*i")) return {re, neg ? -im : im};
            }
            rewind(save); // a sum continues here, not an imaginary part
        }
        return {re};
    }

    const std::string& text() const { return s_; }

private:
    const std::string& s_;
    std::size_t pos_ = 0;
};

InducedFactor parse_segment_factor(Parser& p) {
    p.expect("[");
    GaussQ first = p.gauss();
    if (p.try_consume(",")) {
        GaussQ second = p.gauss();
        p.expect("]");
        GaussQ lo = first, hi = second;
        auto d = diff_class(hi, lo);
        if (d.kind != DiffKind::Integer)
            throw domain_error("segment endpoints must differ by an integer");
        if (d.k < 0) std::swap(lo, hi);
        if (lo == hi) {
            int eps = p.try_consume("+sgn") ? 1 : 0;
            return InducedFactor::character(eps, lo);
        }
        long long len = (hi - lo).re.num();
        return InducedFactor::ds(len, GaussQ{(lo.re + hi.re) / Rat(2),
                                             (lo.im + hi.im) / Rat(2)});
    }
    p.expect("]");
    int eps = p.try_consume("+sgn") ? 1 : 0;
    return InducedFactor::character(eps, first);
}

InducedFactor parse_char_factor(Parser& p) {
    if (p.try_consume("w") || p.try_consume("sgn")) {
        std::size_t save = p.pos();
        p.try_consume("*");
        if (p.try_consume("nu^{")) {
            GaussQ s = p.gauss();
            p.expect("}");
            return InducedFactor::character(1, s);
        }
        p.rewind(save);
        return InducedFactor::character(1, GaussQ{});
    }
    if (p.try_consume("1")) return InducedFactor::character(0, GaussQ{});
    if (p.try_consume("nu^{")) {
        GaussQ s = p.gauss();
        p.expect("}");
        return InducedFactor::character(0, s);
    }
    p.fail("factor ('[', 'nu^{', 'w' or '1')");
}

InducedFactor parse_factor(Parser& p) {
    if (p.try_consume("D{")) {
        std::size_t lpos = p.pos();
        long long l = p.integer();
        p.expect("}");
        if (l < 2) throw parse_error(lpos, "D{l} with l >= 2");
        return InducedFactor::ds(l - 1, GaussQ{});
    }
    p.skip_ws();
    if (!p.at_end() && p.text()[p.pos()] == '[') return parse_segment_factor(p);
    return parse_char_factor(p);
}

IrredWR parse_irred_two_dim(Parser& p) {
    // caller consumed "Ind{"
    GaussQ mu = p.gauss();
    p.expect(",");
    GaussQ nu = p.gauss();
    p.expect("}");
    return IrredWR::two_dim(mu, nu);
}

VirtualRep parse_param_term(Parser& p) {
    long long mult = 1;
    p.skip_ws();
    std::size_t save = p.pos();
    if (!p.at_end() && std::isdigit(static_cast<unsigned char>(p.text()[p.pos()]))) {
        long long n = p.integer();
        if (p.try_consume("*")) {
            mult = n;
        } else if (n == 1) {
            // bare `1`: the trivial character
            VirtualRep v(trivial_char());
            return v;
        } else {
            p.rewind(save);
            p.fail("'*' after multiplicity");
        }
    }
    VirtualRep atom;
    if (p.try_consume("D{")) {
        std::size_t lpos = p.pos();
        long long l = p.integer();
        p.expect("}");
        if (l < 2) throw parse_error(lpos, "D{l} with l >= 2");
        atom = VirtualRep(IrredWR::discrete(l));
    } else if (p.try_consume("Ind{")) {
        atom = VirtualRep(parse_irred_two_dim(p));
    } else {
        InducedFactor f = parse_char_factor(p);
        atom = VirtualRep(RealChar(f.as_char().eps, f.as_char().s));
    }
    VirtualRep out;
    for (auto& [rep, m] : atom.summands()) out.add(rep, m * mult);
    return out;
}

} // namespace

std::vector<InducedFactor> parse_factors(const std::string& input) {
    Parser p(input);
    std::vector<InducedFactor> out;
    out.push_back(parse_factor(p));
    while (p.try_consume("x")) out.push_back(parse_factor(p));
    if (!p.at_end()) p.fail("'x' or end of input");
    return out;
}

VirtualRep parse_param(const std::string& input) {
    Parser p(input);
    VirtualRep out = parse_param_term(p);
    while (p.try_consume("+")) out = out + parse_param_term(p);
    if (!p.at_end()) p.fail("'+' or end of input");
    return out;
}

GroupDescriptor parse_group(const std::string& input) {
    Parser p(input);
    if (p.try_consume("GL(")) {
        long long n = p.integer();
        p.expect(")");
        if (!p.at_end()) p.fail("end of input");
        return GroupDescriptor::gl(n);
    }
    if (p.try_consume("Sp(")) {
        long long n = p.integer();
        p.expect(")");
        if (!p.at_end()) p.fail("end of input");
        return GroupDescriptor::sp(n);
    }
    if (p.try_consume("SO(")) {
        long long a = p.integer();
        p.expect(",");
        long long b = p.integer();
        p.expect(")");
        if (!p.at_end()) p.fail("end of input");
        return GroupDescriptor::so(a, b);
    }
    Parser q(input);
    q.fail("group descriptor GL(n), Sp(2n) or SO(p,q)");
}

Rat parse_rat(const std::string& input) {
    Parser p(input);
    Rat r = p.rat();
    if (!p.at_end()) p.fail("end of input");
    return r;
}

} // namespace wr
