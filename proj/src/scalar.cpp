#include "twistlab/scalar.hpp"

#include <charconv>
#include <map>
#include <memory>
#include <mutex>

namespace twistlab {

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

namespace detail {

const PrimeTable* prime_table(std::uint32_t p)
{
    static std::mutex mu;
    static std::map<std::uint32_t, std::unique_ptr<PrimeTable>> tables;
    std::lock_guard lock(mu);
    auto& slot = tables[p];
    if (!slot) {
        auto t = std::make_unique<PrimeTable>();
        t->p = p;
        t->inverse.assign(p, 0);
        for (std::uint32_t a = 1; a < p; ++a) {
            if (t->inverse[a])
                continue;
            // a^(p-2) by square-and-multiply
            std::uint64_t r = 1, b = a, e = p - 2;
            while (e) {
                if (e & 1)
                    r = r * b % p;
                b = b * b % p;
                e >>= 1;
            }
            t->inverse[a] = static_cast<std::uint32_t>(r);
            t->inverse[r] = a;
        }
        slot = std::move(t);
    }
    return slot.get();
}

} // namespace detail

Field Field::prime(std::uint32_t p)
{
    if (!is_prime(p))
        throw InvalidInput("characteristic " + std::to_string(p) + " is not prime");
    if (p >= (1u << 20))
        throw InvalidInput("prime " + std::to_string(p) + " too large for residue tables");
    return Field(detail::prime_table(p));
}

Field Field::parse(std::string_view text)
{
    if (text == "q" || text == "Q" || text == "rationals")
        return rationals();
    if (text.size() > 2 && (text[0] == 'p' || text[0] == 'P') && text[1] == ':') {
        std::uint32_t p = 0;
        auto body = text.substr(2);
        auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
        if (ec == std::errc() && ptr == body.data() + body.size())
            return prime(p);
    }
    throw InvalidInput("bad field '" + std::string(text) + "' (expected q or p:<prime>)");
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long v) const
{
    if (!table_)
        return Scalar(mpq_class(v));
    long p = table_->p;
    long r = v % p;
    if (r < 0)
        r += p;
    return Scalar(Scalar::Residue{static_cast<std::uint32_t>(r), table_});
}

Scalar Field::from_rational(const mpq_class& q) const
{
    if (!table_)
        return Scalar(q);
    return reduce_mod(Scalar(q), *this);
}

std::string Field::to_string() const
{
    return table_ ? "p:" + std::to_string(table_->p) : "q";
}

Field Scalar::field() const
{
    if (auto r = std::get_if<Residue>(&v_))
        return Field(r->table);
    return Field::rationals();
}

void Scalar::require_same(const Scalar& o) const
{
    const auto* a = std::get_if<Residue>(&v_);
    const auto* b = std::get_if<Residue>(&o.v_);
    if ((a == nullptr) != (b == nullptr) || (a && a->table != b->table))
        throw FieldMismatch("arithmetic between " + field().to_string() + " and " +
                            o.field().to_string());
}

bool Scalar::is_zero() const
{
    if (auto r = std::get_if<Residue>(&v_))
        return r->value == 0;
    return sgn(std::get<mpq_class>(v_)) == 0;
}

bool Scalar::is_one() const
{
    if (auto r = std::get_if<Residue>(&v_))
        return r->value == 1;
    return std::get<mpq_class>(v_) == 1;
}

Scalar Scalar::inverse() const
{
    if (is_zero())
        throw MathError("division by zero");
    if (auto r = std::get_if<Residue>(&v_))
        return Residue{r->table->inverse[r->value], r->table};
    return Scalar(mpq_class(1) / std::get<mpq_class>(v_));
}

Scalar& Scalar::operator+=(const Scalar& o)
{
    require_same(o);
    if (auto r = std::get_if<Residue>(&v_)) {
        auto p = r->table->p;
        std::uint32_t s = r->value + std::get<Residue>(o.v_).value;
        r->value = s >= p ? s - p : s;
    } else {
        std::get<mpq_class>(v_) += std::get<mpq_class>(o.v_);
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o)
{
    require_same(o);
    if (auto r = std::get_if<Residue>(&v_)) {
        auto p = r->table->p;
        auto b = std::get<Residue>(o.v_).value;
        r->value = r->value >= b ? r->value - b : r->value + p - b;
    } else {
        std::get<mpq_class>(v_) -= std::get<mpq_class>(o.v_);
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o)
{
    require_same(o);
    if (auto r = std::get_if<Residue>(&v_)) {
        std::uint64_t prod = std::uint64_t(r->value) * std::get<Residue>(o.v_).value;
        r->value = static_cast<std::uint32_t>(prod % r->table->p);
    } else {
        std::get<mpq_class>(v_) *= std::get<mpq_class>(o.v_);
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o)
{
    require_same(o);
    return *this *= o.inverse();
}

Scalar Scalar::operator-() const
{
    if (auto r = std::get_if<Residue>(&v_))
        return Residue{r->value ? r->table->p - r->value : 0, r->table};
    return Scalar(mpq_class(-std::get<mpq_class>(v_)));
}

bool operator==(const Scalar& a, const Scalar& b)
{
    const auto* ra = std::get_if<Scalar::Residue>(&a.v_);
    const auto* rb = std::get_if<Scalar::Residue>(&b.v_);
    if (ra && rb)
        return ra->table == rb->table && ra->value == rb->value;
    if (!ra && !rb)
        return std::get<mpq_class>(a.v_) == std::get<mpq_class>(b.v_);
    return false;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b)
{
    a.require_same(b);
    if (const auto* ra = std::get_if<Scalar::Residue>(&a.v_))
        return ra->value <=> std::get<Scalar::Residue>(b.v_).value;
    int c = cmp(std::get<mpq_class>(a.v_), std::get<mpq_class>(b.v_));
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string Scalar::to_string() const
{
    if (auto r = std::get_if<Residue>(&v_))
        return std::to_string(r->value);
    const auto& q = std::get<mpq_class>(v_);
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Scalar reduce_mod(const Scalar& q, const Field& target)
{
    if (!target.is_prime_field())
        return q;
    if (!q.is_rational())
        throw FieldMismatch("reduce_mod expects a rational");
    long p = target.characteristic();
    mpz_class num = q.rational().get_num() % p;
    mpz_class den = q.rational().get_den() % p;
    if (den == 0)
        throw MathError("denominator divisible by " + std::to_string(p));
    return target.from_int(num.get_si()) / target.from_int(den.get_si());
}

} // namespace twistlab
