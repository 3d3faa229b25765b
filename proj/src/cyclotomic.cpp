#include "permident/cyclotomic.hpp"

#include <sstream>
#include <utility>

namespace permident {

namespace {

// Polynomials over Q as bare coefficient vectors (lowest degree first),
// trimmed so the back is nonzero. Internal helpers for reduction and the
// extended Euclidean inverse.

void trim(std::vector<Rat>& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// In-place remainder of p modulo a monic divisor.
void reduce_mod(std::vector<Rat>& p, const std::vector<Rat>& monic) {
    const std::size_t deg = monic.size() - 1;
    trim(p);
    while (p.size() > deg) {
        const Rat lead = p.back();
        const std::size_t shift = p.size() - 1 - deg;
        if (!lead.is_zero())
            for (std::size_t j = 0; j < deg; ++j)
                p[shift + j] -= lead * monic[j];
        p.pop_back();
        trim(p);
    }
}

std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rat> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

std::vector<Rat> poly_sub(std::vector<Rat> a, const std::vector<Rat>& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

// Division with remainder over Q; divisor need not be monic.
std::pair<std::vector<Rat>, std::vector<Rat>> poly_divmod(std::vector<Rat> num,
                                                          const std::vector<Rat>& den) {
    std::vector<Rat> quot;
    if (den.empty()) throw DivisionByZeroError("polynomial division by zero");
    if (num.size() < den.size()) return {quot, std::move(num)};
    quot.assign(num.size() - den.size() + 1, Rat());
    const Rat lead_inv = den.back().inverse();
    for (std::size_t k = quot.size(); k-- > 0;) {
        if (num.size() < den.size() + k || num[den.size() - 1 + k].is_zero()) continue;
        Rat q = num[den.size() - 1 + k] * lead_inv;
        quot[k] = q;
        for (std::size_t j = 0; j < den.size(); ++j)
            num[k + j] -= q * den[j];
        trim(num);
    }
    trim(quot);
    return {std::move(quot), std::move(num)};
}

} // namespace

CycloField::CycloField(unsigned n) : order_(n), modulus_(cyclotomic_poly(n)) {
    modulus_rat_.resize(modulus_.coeffs().size());
    for (std::size_t i = 0; i < modulus_rat_.size(); ++i)
        modulus_rat_[i] = Rat(modulus_.coeffs()[i]);
}

CycloFieldPtr CycloField::create(unsigned n) {
    if (n == 0) throw DomainError("cyclotomic field order must be >= 1");
    return CycloFieldPtr(new CycloField(n));
}

CycloNum CycloField::zero() const {
    return CycloNum(shared_from_this(), {});
}

CycloNum CycloField::one() const {
    return from_rational(Rat(1));
}

CycloNum CycloField::from_rational(const Rat& r) const {
    return CycloNum(shared_from_this(), {r});
}

CycloNum CycloField::zeta() const {
    return root_power(shared_from_this(), 1);
}

CycloNum::CycloNum(CycloFieldPtr field, std::vector<Rat> raw_coeffs)
    : field_(std::move(field)), c_(std::move(raw_coeffs)) {
    const unsigned deg = field_->degree();
    if (c_.size() > deg) {
        reduce_mod(c_, field_->modulus_rat());
    }
    c_.resize(deg);
}

bool CycloNum::is_zero() const {
    for (const Rat& a : c_)
        if (!a.is_zero()) return false;
    return true;
}

bool CycloNum::is_one() const {
    if (!c_[0].is_one()) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

void CycloNum::check_same_field(const CycloNum& o, const char* op) const {
    if (field_->order() != o.field_->order())
        throw FieldMismatchError(std::string(op) + " on cyclotomic numbers of order " +
                                 std::to_string(field_->order()) + " and " +
                                 std::to_string(o.field_->order()));
}

CycloNum CycloNum::operator-() const {
    CycloNum out = *this;
    for (Rat& a : out.c_) a = -a;
    return out;
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
    check_same_field(o, "addition");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o) {
    check_same_field(o, "subtraction");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

CycloNum& CycloNum::operator*=(const CycloNum& o) {
    check_same_field(o, "multiplication");
    std::vector<Rat> prod = poly_mul(c_, o.c_);
    reduce_mod(prod, field_->modulus_rat());
    prod.resize(field_->degree());
    c_ = std::move(prod);
    return *this;
}

CycloNum& CycloNum::operator/=(const CycloNum& o) {
    return *this *= o.inv();
}

bool operator==(const CycloNum& a, const CycloNum& b) {
    return a.field_->order() == b.field_->order() && a.c_ == b.c_;
}

CycloNum CycloNum::inv() const {
    if (is_zero()) throw DivisionByZeroError("inverse of cyclotomic zero");

    // Extended Euclid on (a, Phi_n) over Q: maintain u with u*a = r (mod Phi).
    std::vector<Rat> r0 = c_;
    trim(r0);
    std::vector<Rat> r1 = field_->modulus_rat();
    std::vector<Rat> u0 = {Rat(1)};
    std::vector<Rat> u1 = {};
    while (!r1.empty()) {
        auto [q, rem] = poly_divmod(r0, r1);
        std::vector<Rat> u2 = poly_sub(std::move(u0), poly_mul(q, u1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    // r0 is a nonzero constant: gcd(a, Phi_n) = 1 since Phi_n is irreducible.
    if (r0.size() != 1)
        throw InternalInconsistencyError("cyclotomic gcd is not a unit");
    const Rat scale = r0[0].inverse();
    for (Rat& a : u0) a *= scale;
    return CycloNum(field_, std::move(u0));
}

CycloNum CycloNum::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    CycloNum base = *this;
    CycloNum acc = field_->one();
    unsigned long k = static_cast<unsigned long>(e);
    while (k > 0) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

std::optional<Rat> CycloNum::as_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return std::nullopt;
    return c_[0];
}

std::string CycloNum::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ",";
        os << c_[i].to_string();
    }
    os << ")";
    return os.str();
}

CycloNum root_power(const CycloFieldPtr& field, long k) {
    const long n = static_cast<long>(field->order());
    long m = k % n;
    if (m < 0) m += n;
    std::vector<Rat> coeffs(static_cast<std::size_t>(m) + 1);
    coeffs.back() = Rat(1);
    return CycloNum(field, std::move(coeffs));
}

} // namespace permident
