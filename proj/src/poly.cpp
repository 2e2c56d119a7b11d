#include "apolar/poly.hpp"

#include "apolar/errors.hpp"

#include <algorithm>
#include <cctype>

namespace apolar {

static void require_same_ring(const Poly& a, const Poly& b, const char* op) {
    if (!a.ring() || !b.ring() || !(*a.ring() == *b.ring()))
        throw MathError(std::string(op) + ": operands live in different rings");
}

Poly Poly::constant(Ring ring, Rational c) {
    Poly p(std::move(ring));
    p.add_term(Monomial(p.ring_->arity(), 0), c);
    return p;
}

Poly Poly::monomial(Ring ring, Monomial m, Rational coeff) {
    Poly p(std::move(ring));
    if (static_cast<int>(m.size()) != p.ring_->arity())
        throw MathError("monomial: exponent vector has wrong arity");
    p.add_term(m, coeff);
    return p;
}

Poly Poly::variable(Ring ring, int index) {
    Poly p(std::move(ring));
    Monomial m(p.ring_->arity(), 0);
    m.at(index) = 1;
    p.add_term(m, 1);
    return p;
}

Rational Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Poly::constant_term() const {
    return coeff(Monomial(ring_->arity(), 0));
}

int Poly::weighted_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, ring_->weighted_degree(m));
    return d;
}

bool Poly::is_quasi_homogeneous() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
        int dm = ring_->weighted_degree(m);
        if (d < 0) d = dm;
        if (dm != d) return false;
    }
    return true;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator+(const Poly& o) const {
    require_same_ring(*this, o, "add");
    Poly out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

Poly Poly::operator-(const Poly& o) const {
    require_same_ring(*this, o, "sub");
    Poly out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

Poly Poly::operator-() const {
    Poly out(ring_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Poly Poly::operator*(const Poly& o) const {
    require_same_ring(*this, o, "mul");
    Poly out(ring_);
    int n = ring_->arity();
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m(n);
            for (int i = 0; i < n; ++i) m[i] = ma[i] + mb[i];
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

Poly Poly::operator*(const Rational& c) const {
    Poly out(ring_);
    if (c == 0) return out;
    for (const auto& [m, t] : terms_) out.terms_.emplace(m, t * c);
    return out;
}

bool Poly::operator==(const Poly& o) const {
    return ring_ && o.ring_ && *ring_ == *o.ring_ && terms_ == o.terms_;
}

Poly Poly::truncated_above(int bound) const {
    Poly out(ring_);
    for (const auto& [m, c] : terms_) {
        if (ring_->weighted_degree(m) <= bound) out.terms_.emplace(m, c);
    }
    return out;
}

Rational Poly::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != ring_->arity())
        throw MathError("evaluate: point has wrong arity");
    Rational acc = 0;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (size_t i = 0; i < m.size(); ++i) t *= pow_rational(point[i], m[i]);
        acc += t;
    }
    return acc;
}

Poly directional_derivative(const Poly& f, const std::vector<Rational>& v) {
    if (static_cast<int>(v.size()) != f.ring()->arity())
        throw MathError("directional_derivative: direction has wrong arity");
    Poly out(f.ring());
    for (const auto& [m, c] : f.terms()) {
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0 || v[i] == 0) continue;
            Monomial dm = m;
            dm[i] -= 1;
            out.add_term(dm, c * v[i] * m[i]);
        }
    }
    return out;
}

Poly apply_diffop(const Poly& P, const Poly& f) {
    require_same_ring(P, f, "apply_diffop");
    Poly out(f.ring());
    int n = f.ring()->arity();
    for (const auto& [alpha, cp] : P.terms()) {
        for (const auto& [beta, cf] : f.terms()) {
            Rational coeff = cp * cf;
            Monomial m(n);
            bool ok = true;
            for (int i = 0; i < n && ok; ++i) {
                if (beta[i] < alpha[i]) {
                    ok = false;
                    break;
                }
                m[i] = beta[i] - alpha[i];
                // falling factorial beta_i * (beta_i - 1) * ... down alpha_i steps
                for (int k = 0; k < alpha[i]; ++k) coeff *= beta[i] - k;
            }
            if (ok) out.add_term(m, coeff);
        }
    }
    return out;
}

Rational apolar_pairing(const Poly& P, const Poly& f) {
    return apply_diffop(P, f).constant_term();
}

Poly substitute(const Poly& f, const std::vector<Poly>& images, Ring target) {
    if (static_cast<int>(images.size()) != f.ring()->arity())
        throw MathError("substitute: image count does not match arity");
    for (const auto& img : images) {
        if (!(*img.ring() == *target)) throw MathError("substitute: image in wrong target ring");
    }
    Poly out(target);
    for (const auto& [m, c] : f.terms()) {
        Poly term = Poly::constant(target, c);
        for (size_t i = 0; i < m.size(); ++i) {
            for (int k = 0; k < m[i]; ++k) term = term * images[i];
        }
        out = out + term;
    }
    return out;
}

std::map<int, Poly> quasi_homogeneous_components(const Poly& f) {
    std::map<int, Poly> out;
    for (const auto& [m, c] : f.terms()) {
        int d = f.ring()->weighted_degree(m);
        auto it = out.find(d);
        if (it == out.end()) it = out.emplace(d, Poly(f.ring())).first;
        it->second.add_term(m, c);
    }
    return out;
}

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::vector<const std::pair<const Monomial, Rational>*> terms;
    for (const auto& t : p.terms()) terms.push_back(&t);
    std::sort(terms.begin(), terms.end(), [&](const auto* a, const auto* b) {
        return grlex_less(*p.ring(), b->first, a->first);
    });
    std::string s;
    bool first = true;
    for (const auto* t : terms) {
        const Rational& c = t->second;
        bool neg = c < 0;
        Rational mag = neg ? Rational(-c) : c;
        if (first) {
            if (neg) s += '-';
            first = false;
        } else {
            s += neg ? '-' : '+';
        }
        std::string mono = monomial_to_string(*p.ring(), t->first);
        if (mono == "1") {
            s += to_string(mag);
        } else if (mag == 1) {
            s += mono;
        } else {
            s += to_string(mag) + "*" + mono;
        }
    }
    return s;
}

namespace {

// recursive-descent parser for the polynomial grammar
class PolyParser {
public:
    PolyParser(const Ring& ring, const std::string& text) : ring_(ring), text_(text) {}

    Poly parse() {
        Poly out(ring_);
        skip_ws();
        bool neg = accept_sign();
        out = out + parse_term(neg);
        skip_ws();
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c != '+' && c != '-') fail("expected '+' or '-'");
            ++pos_;
            out = out + parse_term(c == '-');
            skip_ws();
        }
        return out;
    }

private:
    const Ring& ring_;
    const std::string& text_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& why) {
        throw ParseError("polynomial '" + text_ + "': " + why + " at position " +
                         std::to_string(pos_));
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept_sign() {
        skip_ws();
        if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
            bool neg = text_[pos_] == '-';
            ++pos_;
            return neg;
        }
        return false;
    }

    std::string read_integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected integer");
        return text_.substr(start, pos_ - start);
    }

    std::string read_identifier() {
        skip_ws();
        size_t start = pos_;
        if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) ||
                                    text_[pos_] == '_')) {
            ++pos_;
            while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                           text_[pos_] == '_'))
                ++pos_;
        }
        if (pos_ == start) fail("expected variable name");
        return text_.substr(start, pos_ - start);
    }

    bool at_digit() {
        skip_ws();
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }

    Poly parse_term(bool negate) {
        Rational coeff = 1;
        Monomial expo(ring_->arity(), 0);
        bool saw_factor = false;

        if (at_digit()) {
            std::string num = read_integer();
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                std::string den = read_integer();
                if (Int(den) == 0) fail("zero denominator");
                coeff = Rational(Int(num), Int(den));
            } else {
                coeff = Rational(Int(num));
            }
            saw_factor = true;
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '*') {
                ++pos_;
                parse_factors(expo);
            } else if (pos_ < text_.size() &&
                       (std::isalpha(static_cast<unsigned char>(text_[pos_])) ||
                        text_[pos_] == '_')) {
                // the '*' between coefficient and monomial is optional
                parse_factors(expo);
            }
        } else {
            parse_factors(expo);
            saw_factor = true;
        }
        if (!saw_factor) fail("empty term");
        if (negate) coeff = -coeff;
        return Poly::monomial(ring_, expo, coeff);
    }

    void parse_factors(Monomial& expo) {
        while (true) {
            std::string name = read_identifier();
            auto it = std::find(ring_->variables.begin(), ring_->variables.end(), name);
            if (it == ring_->variables.end()) fail("unknown variable '" + name + "'");
            int idx = static_cast<int>(it - ring_->variables.begin());
            int e = 1;
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '^') {
                ++pos_;
                std::string digits = read_integer();
                try {
                    e = std::stoi(digits);
                } catch (const std::out_of_range&) {
                    fail("exponent out of range");
                }
            }
            expo[idx] += e;
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '*') {
                ++pos_;
                continue;
            }
            break;
        }
    }
};

}  // namespace

Poly parse_poly(const Ring& ring, const std::string& text) {
    return PolyParser(ring, text).parse();
}

}  // namespace apolar
