#include "qalg/ring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "qalg/errors.hpp"

namespace qalg {

RingSpec::RingSpec(std::vector<VarSpec> vars) : vars_(std::move(vars)) {
    if (vars_.empty())
        throw Error("a ring needs at least one variable");
    std::set<std::string> seen;
    for (const auto& v : vars_) {
        if (v.name.empty())
            throw Error("variable names must be nonempty");
        if (v.degree < 1)
            throw Error("variable '" + v.name + "' must have degree >= 1");
        if (!seen.insert(v.name).second)
            throw Error("duplicate variable name '" + v.name + "'");
    }
}

std::optional<std::size_t> RingSpec::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].name == name)
            return i;
    return std::nullopt;
}

bool RingSpec::operator==(const RingSpec& other) const {
    if (vars_.size() != other.vars_.size())
        return false;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].name != other.vars_[i].name || vars_[i].degree != other.vars_[i].degree)
            return false;
    return true;
}

RingPtr make_ring(std::vector<VarSpec> vars) {
    return std::make_shared<const RingSpec>(std::move(vars));
}

Monomial::Monomial(std::vector<int> exponents) : e_(std::move(exponents)) {
    for (int x : e_)
        if (x < 0)
            throw Error("monomial exponents must be non-negative");
}

Monomial Monomial::one(std::size_t nvars) { return Monomial(std::vector<int>(nvars, 0)); }

bool Monomial::is_one() const {
    return std::all_of(e_.begin(), e_.end(), [](int x) { return x == 0; });
}

int Monomial::total_degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }

Monomial Monomial::times(const Monomial& other) const {
    std::vector<int> r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i)
        r[i] = e_[i] + other.e_[i];
    return Monomial(std::move(r));
}

bool Monomial::divides(const Monomial& other) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > other.e_[i])
            return false;
    return true;
}

Monomial Monomial::divided_by(const Monomial& other) const {
    std::vector<int> r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) {
        r[i] = e_[i] - other.e_[i];
        if (r[i] < 0)
            throw Error("monomial division with remainder");
    }
    return Monomial(std::move(r));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    std::vector<int> r(a.e_.size());
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = std::max(a.e_[i], b.e_[i]);
    return Monomial(std::move(r));
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.e_.size(); ++i)
        if (a.e_[i] > 0 && b.e_[i] > 0)
            return false;
    return true;
}

int Monomial::lex_cmp(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.e_.size(); ++i) {
        if (a.e_[i] != b.e_[i])
            return a.e_[i] < b.e_[i] ? -1 : 1;
    }
    return 0;
}

int weighted_degree(const Monomial& m, const RingSpec& ring) {
    int d = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        d += m.exp(i) * ring.degree(i);
    return d;
}

std::string format_monomial(const Monomial& m, const RingSpec& ring) {
    if (m.is_one())
        return "1";
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m.exp(i) == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += ring.name(i);
        if (m.exp(i) > 1)
            out += '^' + std::to_string(m.exp(i));
    }
    return out;
}

SignedSubstitution::SignedSubstitution(RingPtr ring, std::vector<Image> images)
    : ring_(std::move(ring)), images_(std::move(images)) {
    if (images_.size() != ring_->size())
        throw Error("substitution must assign every ring variable");
    std::vector<bool> hit(ring_->size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
        const Image& im = images_[i];
        if (im.sign != 1 && im.sign != -1)
            throw Error("substitution signs must be +1 or -1");
        if (im.var >= ring_->size())
            throw Error("substitution image out of range");
        if (ring_->degree(im.var) != ring_->degree(i))
            throw DegreeMismatch("substitution sends '" + ring_->name(i) + "' (degree " +
                                 std::to_string(ring_->degree(i)) + ") to '" + ring_->name(im.var) +
                                 "' (degree " + std::to_string(ring_->degree(im.var)) + ")");
        if (hit[im.var])
            throw Error("substitution is not bijective on variables");
        hit[im.var] = true;
    }
}

SignedSubstitution SignedSubstitution::identity(RingPtr ring) {
    std::vector<Image> images(ring->size());
    for (std::size_t i = 0; i < images.size(); ++i)
        images[i] = {i, 1};
    return SignedSubstitution(std::move(ring), std::move(images));
}

bool SignedSubstitution::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i].var != i || images_[i].sign != 1)
            return false;
    return true;
}

bool SignedSubstitution::is_diagonal() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i].var != i)
            return false;
    return true;
}

SignedSubstitution SignedSubstitution::after(const SignedSubstitution& inner) const {
    if (*ring_ != *inner.ring_)
        throw RingMismatch("composing substitutions over different rings");
    std::vector<Image> images(images_.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
        const Image& first = inner.images_[i];
        const Image& second = images_[first.var];
        images[i] = {second.var, first.sign * second.sign};
    }
    return SignedSubstitution(ring_, std::move(images));
}

std::pair<Monomial, int> SignedSubstitution::apply(const Monomial& m) const {
    std::vector<int> e(m.size(), 0);
    int sign = 1;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m.exp(i) == 0)
            continue;
        e[images_[i].var] += m.exp(i);
        if (images_[i].sign < 0 && (m.exp(i) & 1))
            sign = -sign;
    }
    return {Monomial(std::move(e)), sign};
}

bool SignedSubstitution::operator==(const SignedSubstitution& other) const {
    if (*ring_ != *other.ring_)
        return false;
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i].var != other.images_[i].var || images_[i].sign != other.images_[i].sign)
            return false;
    return true;
}

bool SignedSubstitution::operator<(const SignedSubstitution& other) const {
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (images_[i].var != other.images_[i].var)
            return images_[i].var < other.images_[i].var;
        if (images_[i].sign != other.images_[i].sign)
            return images_[i].sign < other.images_[i].sign;
    }
    return false;
}

std::string SignedSubstitution::format() const {
    std::string out;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (!out.empty())
            out += ", ";
        out += ring_->name(i) + " -> ";
        if (images_[i].sign < 0)
            out += '-';
        out += ring_->name(images_[i].var);
    }
    return out;
}

Polynomial Polynomial::zero(RingPtr ring) { return Polynomial(std::move(ring)); }

Polynomial Polynomial::constant(RingPtr ring, const Rat& c) {
    Polynomial p(ring);
    p.add_term(Monomial::one(ring->size()), c);
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
    if (index >= ring->size())
        throw Error("variable index out of range");
    std::vector<int> e(ring->size(), 0);
    e[index] = 1;
    Polynomial p(ring);
    p.add_term(Monomial(std::move(e)), Rat(1));
    return p;
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, const Rat& c) {
    if (m.size() != ring->size())
        throw RingMismatch("monomial length does not match ring");
    Polynomial p(ring);
    p.add_term(m, c);
    return p;
}

void Polynomial::add_term(const Monomial& m, const Rat& c) {
    if (c == 0)
        return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void Polynomial::check_same_ring(const Polynomial& p, const Polynomial& q) {
    if (*p.ring_ != *q.ring_)
        throw RingMismatch("polynomials live in different rings");
}

std::optional<int> Polynomial::homogeneous_degree() const {
    if (terms_.empty())
        return 0;
    int d = weighted_degree(terms_.begin()->first, *ring_);
    for (const auto& [m, c] : terms_)
        if (weighted_degree(m, *ring_) != d)
            return std::nullopt;
    return d;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_)
        r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::scaled(const Rat& c) const {
    Polynomial r(ring_);
    if (c == 0)
        return r;
    for (const auto& [m, coeff] : terms_)
        r.terms_.emplace(m, coeff * c);
    return r;
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    Polynomial::check_same_ring(p, q);
    Polynomial r = p;
    for (const auto& [m, c] : q.terms_)
        r.add_term(m, c);
    return r;
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) {
    Polynomial::check_same_ring(p, q);
    Polynomial r = p;
    for (const auto& [m, c] : q.terms_)
        r.add_term(m, -c);
    return r;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    Polynomial::check_same_ring(p, q);
    Polynomial r(p.ring_);
    for (const auto& [mp, cp] : p.terms_)
        for (const auto& [mq, cq] : q.terms_)
            r.add_term(mp.times(mq), cp * cq);
    return r;
}

bool Polynomial::operator==(const Polynomial& other) const {
    return *ring_ == *other.ring_ && terms_ == other.terms_;
}

std::string Polynomial::format() const {
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        const bool negative = c < 0;
        if (out.empty()) {
            if (negative)
                out += '-';
        } else {
            out += negative ? '-' : '+';
        }
        Rat a = negative ? Rat(-c) : c;
        if (m.is_one()) {
            out += rat_to_string(a);
        } else {
            if (a != 1)
                out += rat_to_string(a) + "*";
            out += format_monomial(m, *ring_);
        }
    }
    return out;
}

namespace {

/* Recursive-descent scanner for the polynomial grammar:
     poly    := [sign] term { sign term }
     term    := coeff [ '*' factors ] | factors
     factors := factor { '*' factor }
     factor  := ident [ '^' nat ]
     coeff   := nat [ '/' nat ]
   Whitespace is ignored between tokens. */
class PolyParser {
public:
    PolyParser(std::string_view text, RingPtr ring) : text_(text), ring_(std::move(ring)) {}

    Polynomial run() {
        Polynomial acc = Polynomial::zero(ring_);
        skip_ws();
        if (at_end())
            throw ParseError("empty polynomial text", pos_);
        int sign = read_optional_sign();
        acc = acc + read_term(sign);
        skip_ws();
        while (!at_end()) {
            int s = read_required_sign();
            acc = acc + read_term(s);
            skip_ws();
        }
        return acc;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }

    int read_optional_sign() {
        if (!at_end() && (peek() == '+' || peek() == '-')) {
            int s = peek() == '-' ? -1 : 1;
            ++pos_;
            return s;
        }
        return 1;
    }

    int read_required_sign() {
        if (at_end() || (peek() != '+' && peek() != '-'))
            throw ParseError("expected '+' or '-'", pos_);
        int s = peek() == '-' ? -1 : 1;
        ++pos_;
        return s;
    }

    std::string read_nat() {
        skip_ws();
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        if (pos_ == start)
            throw ParseError("expected an integer", pos_);
        return std::string(text_.substr(start, pos_ - start));
    }

    std::string read_ident() {
        skip_ws();
        std::size_t start = pos_;
        if (at_end() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_'))
            throw ParseError("expected a variable name", pos_);
        ++pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    Rat read_coeff() {
        std::string num = read_nat();
        skip_ws();
        if (!at_end() && peek() == '/') {
            ++pos_;
            std::size_t den_pos = pos_;
            std::string den = read_nat();
            if (std::all_of(den.begin(), den.end(), [](char c) { return c == '0'; }))
                throw ParseError("zero denominator", den_pos);
            return rat_from_string(num + "/" + den);
        }
        return rat_from_string(num);
    }

    /* factor := ident ['^' nat]; accumulates into the exponent vector. */
    void read_factor(std::vector<int>& exps) {
        std::size_t name_pos = pos_;
        skip_ws();
        name_pos = pos_;
        std::string name = read_ident();
        auto idx = ring_->index_of(name);
        if (!idx)
            throw ParseError("unknown variable '" + name + "'", name_pos);
        int e = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
            ++pos_;
            std::string n = read_nat();
            try {
                e = std::stoi(n);
            } catch (const std::exception&) {
                throw ParseError("exponent out of range", pos_);
            }
        }
        exps[*idx] += e;
    }

    Polynomial read_term(int sign) {
        skip_ws();
        if (at_end())
            throw ParseError("expected a term", pos_);
        Rat coeff(sign);
        std::vector<int> exps(ring_->size(), 0);
        bool saw_factor = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff *= read_coeff();
            skip_ws();
            if (!at_end() && peek() == '*') {
                ++pos_;
                read_factor(exps);
                saw_factor = true;
            }
        } else {
            read_factor(exps);
            saw_factor = true;
        }
        skip_ws();
        while (saw_factor && !at_end() && peek() == '*') {
            ++pos_;
            read_factor(exps);
            skip_ws();
        }
        return Polynomial::term(ring_, Monomial(std::move(exps)), coeff);
    }

    std::string_view text_;
    RingPtr ring_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial Polynomial::parse(std::string_view text, RingPtr ring) {
    return PolyParser(text, std::move(ring)).run();
}

Polynomial substitute(const Polynomial& p, const SignedSubstitution& s) {
    if (*p.ring() != *s.ring())
        throw RingMismatch("substitution ring does not match polynomial ring");
    Polynomial r = Polynomial::zero(p.ring());
    for (const auto& [m, c] : p.terms()) {
        auto [im, sign] = s.apply(m);
        r = r + Polynomial::term(p.ring(), im, sign < 0 ? Rat(-c) : c);
    }
    return r;
}

} // namespace qalg
