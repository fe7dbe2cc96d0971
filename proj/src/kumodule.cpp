#include "kucalc/kumodule.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace kucalc {

int degree(const Monomial& x)
{
    if (x.i < 1 || x.j < 1)
        throw std::invalid_argument("indices must be >= 1");
    return 2 * static_cast<int>(x.m + x.i + x.j - 1);
}

ModuleContext::ModuleContext(std::uint64_t p, unsigned t, unsigned n)
    : p_(p), t_(t), n_(n)
{
    if (!is_prime(p))
        throw std::invalid_argument("p must be prime");
    if (n < 1)
        throw std::invalid_argument("n must be >= 1");
    if (t < n)
        throw std::invalid_argument("t must be >= n");
    pn_ = ipow(p, n);
    boundary_ = pn_series(p, t);
    relations_ = pn_series(p, n);
    alpha_weight_ = ipow(p, t).get_ui() + 1;
    e_weight_ = ipow(p, t - 1).get_ui() + 1;
    if (t == 2 && n == 2) {
        units_ = extract_units(p);
        qtable_ = q_polys(*units_);
    }
}

ModuleContext ModuleContext::with_relation_series(std::uint64_t p, unsigned t, unsigned n,
                                                  PSeries relations)
{
    ModuleContext ctx(p, t, n);
    if (relations.coeffs.empty() || relations.scalar(0) != ctx.pn_)
        throw std::invalid_argument("relation series must start with p^n");
    ctx.relations_ = std::move(relations);
    return ctx;
}

std::uint64_t ModuleContext::g(unsigned k) const
{
    return ipow(p_, k).get_ui() - 1;
}

ModuleElement::ModuleElement(const Monomial& x, const PLocalScalar& c)
{
    add(x, c);
}

void ModuleElement::add(const Monomial& x, const PLocalScalar& c)
{
    if (x.i < 1 || x.j < 1)
        throw std::invalid_argument("indices must be >= 1");
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(x, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

PLocalScalar ModuleElement::coefficient(const Monomial& x) const
{
    auto it = terms_.find(x);
    return it == terms_.end() ? PLocalScalar() : it->second;
}

std::optional<int> ModuleElement::homogeneous_degree() const
{
    std::optional<int> d;
    for (const auto& [x, c] : terms_) {
        const int dx = degree(x);
        if (d && *d != dx)
            return std::nullopt;
        d = dx;
    }
    return d;
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& o)
{
    for (const auto& [x, c] : o.terms_)
        add(x, c);
    return *this;
}

ModuleElement& ModuleElement::operator-=(const ModuleElement& o)
{
    for (const auto& [x, c] : o.terms_)
        add(x, -c);
    return *this;
}

ModuleElement ModuleElement::operator-() const
{
    ModuleElement r;
    for (const auto& [x, c] : terms_)
        r.terms_.emplace(x, -c);
    return r;
}

ModuleElement operator*(const PLocalScalar& c, const ModuleElement& x)
{
    ModuleElement r;
    if (c.is_zero())
        return r;
    for (const auto& [m, a] : x.terms_)
        r.terms_.emplace(m, c * a);
    return r;
}

ModuleElement ModuleElement::times_v(unsigned k) const
{
    ModuleElement r;
    for (const auto& [x, c] : terms_)
        r.terms_.emplace(Monomial{x.m + k, x.i, x.j}, c);
    return r;
}

namespace {

// Rewrite sites are visited by descending j, then m, then i.
struct RewriteFirst {
    bool operator()(const Monomial& a, const Monomial& b) const
    {
        if (a.j != b.j)
            return a.j > b.j;
        if (a.m != b.m)
            return a.m > b.m;
        return a.i > b.i;
    }
};

template <class Map>
void add_to(Map& terms, const Monomial& x, const PLocalScalar& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms.try_emplace(x, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms.erase(it);
    }
}

// Splits c = q p^n + r with 0 <= r < p^n; returns q and leaves r in place.
PLocalScalar split_site(PLocalScalar& c, const ModuleContext& ctx)
{
    PLocalScalar r(c.residue(ctx.pn()));
    PLocalScalar q = unit_divide(c - r, ctx.p(), ctx.n());
    c = r;
    return q;
}

template <class Map>
void carry(Map& terms, const Monomial& x, const PLocalScalar& q, const ModuleContext& ctx)
{
    if (q.is_zero())
        return;
    const PSeries& rel = ctx.relation_series();
    for (std::size_t k = 1; k < rel.length() && k < x.j; ++k) {
        const BigInt a = rel.scalar(k);
        add_to(terms, Monomial{x.m + static_cast<unsigned>(k), x.i, x.j - static_cast<unsigned>(k)},
               -(q * PLocalScalar(a)));
    }
}

bool is_normal_coefficient(const PLocalScalar& c, const ModuleContext& ctx)
{
    return c.is_integer() && c.sign() >= 0 && c.numerator() < ctx.pn();
}

}  // namespace

ModuleElement normal_form(const ModuleElement& x, const ModuleContext& ctx, RewriteOrder order)
{
    ModuleElement result;
    if (order == RewriteOrder::LargestJFirst) {
        std::map<Monomial, PLocalScalar, RewriteFirst> work(x.terms().begin(), x.terms().end());
        while (!work.empty()) {
            auto node = work.extract(work.begin());
            PLocalScalar c = node.mapped();
            const PLocalScalar q = split_site(c, ctx);
            if (!c.is_zero())
                result.add(node.key(), c);
            carry(work, node.key(), q, ctx);
        }
        return result;
    }

    // Lowest site first; earlier sites may become non-normal again through
    // later carries, so rescan until every coefficient is a residue.
    std::map<Monomial, PLocalScalar, RewriteFirst> work(x.terms().begin(), x.terms().end());
    for (;;) {
        auto it = std::find_if(work.rbegin(), work.rend(), [&](const auto& kv) {
            return !is_normal_coefficient(kv.second, ctx);
        });
        if (it == work.rend())
            break;
        const Monomial site = it->first;
        PLocalScalar c = it->second;
        const PLocalScalar q = split_site(c, ctx);
        work.erase(site);
        if (!c.is_zero())
            work.emplace(site, c);
        carry(work, site, q, ctx);
    }
    for (const auto& [m, c] : work)
        result.add(m, c);
    return result;
}

bool is_normal(const ModuleElement& x, const ModuleContext& ctx)
{
    return std::all_of(x.terms().begin(), x.terms().end(),
                       [&](const auto& kv) { return is_normal_coefficient(kv.second, ctx); });
}

ModuleElement boundary(const ModuleElement& x, const ModuleContext& ctx)
{
    const PSeries& series = ctx.boundary_series();
    ModuleElement image;
    for (const auto& [mono, c] : x.terms()) {
        for (std::size_t k = 0; k < series.length() && k < mono.i; ++k) {
            const auto ku = static_cast<unsigned>(k);
            image.add(Monomial{mono.m + ku, mono.i - ku, mono.j}, c * PLocalScalar(series.scalar(k)));
        }
    }
    return normal_form(image, ctx);
}

ModuleElement smith_shift(const ModuleElement& x, unsigned di, unsigned dj)
{
    ModuleElement r;
    for (const auto& [mono, c] : x.terms()) {
        if (mono.i <= di || mono.j <= dj)
            continue;
        r.add(Monomial{mono.m, mono.i - di, mono.j - dj}, c);
    }
    return r;
}

Weight weight(const ModuleElement& x, const ModuleContext& ctx)
{
    if (x.is_zero())
        throw std::invalid_argument("weight of the zero element is undefined");
    Weight w;
    for (const auto& [mono, c] : x.terms())
        w = std::max(w, ctx.weight(mono));
    return w;
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    ModuleElement parse()
    {
        ModuleElement result;
        skip();
        if (peek() == '0') {
            std::size_t end = pos_ + 1;
            while (end < s_.size() && std::isspace(static_cast<unsigned char>(s_[end])))
                ++end;
            if (end == s_.size())
                return result;
        }
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = s_[pos_] == '-';
            ++pos_;
        }
        term(result, negative);
        for (;;) {
            skip();
            if (pos_ == s_.size())
                break;
            const char c = s_[pos_];
            if (c != '+' && c != '-')
                fail("expected '+' or '-'");
            ++pos_;
            term(result, c == '-');
        }
        return result;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    char peek()
    {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    void expect(char c)
    {
        if (peek() != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    BigInt integer()
    {
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected an integer");
        return BigInt(std::string(s_.substr(start, pos_ - start)));
    }

    unsigned small_integer()
    {
        const std::size_t start = pos_;
        BigInt v = integer();
        if (!v.fits_uint_p()) {
            pos_ = start;
            fail("integer out of range");
        }
        return static_cast<unsigned>(v.get_ui());
    }

    void term(ModuleElement& out, bool negative)
    {
        BigInt coeff = 1;
        unsigned vexp = 0;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = integer();
            expect('*');
        }
        if (peek() == 'v') {
            ++pos_;
            vexp = 1;
            if (peek() == '^') {
                ++pos_;
                vexp = small_integer();
            }
            expect('*');
        }
        expect('[');
        skip();
        const std::size_t ipos = pos_;
        const unsigned i = small_integer();
        expect(',');
        skip();
        const std::size_t jpos = pos_;
        const unsigned j = small_integer();
        expect(']');
        if (i < 1)
            throw ParseError("index must be >= 1", ipos);
        if (j < 1)
            throw ParseError("index must be >= 1", jpos);
        if (negative)
            coeff = -coeff;
        out.add(Monomial{vexp, i, j}, PLocalScalar(coeff));
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

ModuleElement parse_element(std::string_view text)
{
    return Parser(text).parse();
}

std::string format_term(const Monomial& x, const PLocalScalar& c)
{
    std::ostringstream out;
    const std::string s = c.to_string();
    if (s != "1")
        out << (s == "-1" ? "-" : s + "*");
    if (x.m == 1)
        out << "v*";
    else if (x.m > 1)
        out << "v^" << x.m << "*";
    out << "[" << x.i << "," << x.j << "]";
    return out.str();
}

std::string format_element(const ModuleElement& x)
{
    if (x.is_zero())
        return "0";
    std::vector<std::pair<Monomial, PLocalScalar>> terms(x.terms().begin(), x.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        return std::tie(a.first.i, a.first.j, a.first.m) > std::tie(b.first.i, b.first.j, b.first.m);
    });
    std::string out;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        std::string t = format_term(terms[k].first, terms[k].second);
        if (k > 0) {
            if (t[0] == '-')
                out += " - " + t.substr(1);
            else
                out += " + " + t;
        } else {
            out += t;
        }
    }
    return out;
}

}  // namespace kucalc
