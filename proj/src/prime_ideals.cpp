#include "frey/prime_ideals.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace frey {

std::string PrimeIdeal::to_string() const {
    std::ostringstream os;
    os << "(" << q.get_str() << ", " << fq::to_string(g, "z") << ")";
    return os.str();
}

std::vector<PrimeIdeal> factor_prime(const Int& q, const FieldPtr& field) {
    if (!is_prime(q)) throw rejected_input("factor_prime: q must be prime");
    fq::Poly psi_mod = fq::reduce(field->min_poly().c, q);
    auto factors = fq::factor(psi_mod, q);
    std::vector<PrimeIdeal> out;
    long efsum = 0;
    for (auto& [g, e] : factors) {
        PrimeIdeal P;
        P.field = field;
        P.q = q;
        P.g = g;
        P.e = e;
        P.f = static_cast<int>(fq::deg(g));
        efsum += static_cast<long>(P.e) * P.f;
        out.push_back(std::move(P));
    }
    require(efsum == field->degree(), "factor_prime: sum of e*f does not equal the field degree");
    std::sort(out.begin(), out.end());
    return out;
}

SplittingType splitting_type(const Int& q, const FieldPtr& field) {
    auto primes = factor_prime(q, field);
    SplittingType st;
    for (const auto& P : primes) st.ef.emplace_back(P.e, P.f);
    std::sort(st.ef.begin(), st.ef.end());
    const long m = field->degree();
    st.completely_split = static_cast<long>(primes.size()) == m;
    st.inert = primes.size() == 1 && primes[0].e == 1 && primes[0].f == m;
    st.totally_ramified = primes.size() == 1 && primes[0].e == m && primes[0].f == 1;
    return st;
}

PrimeIdeal ramified_prime(const FieldPtr& field) {
    auto primes = factor_prime(Int(field->r()), field);
    require(primes.size() == 1 && primes[0].e == field->degree(), "ramified_prime: r is not totally ramified");
    return primes[0];
}

namespace {

// Row-style Hermite normal form: upper triangular with positive diagonal,
// entries above each pivot reduced into [0, pivot).
std::vector<std::vector<Int>> hnf(std::vector<std::vector<Int>> rows, size_t m) {
    size_t pivot_row = 0;
    for (size_t col = 0; col < m && pivot_row < rows.size(); ++col) {
        while (true) {
            size_t best = rows.size();
            for (size_t i = pivot_row; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                if (best == rows.size() || abs(rows[i][col]) < abs(rows[best][col])) best = i;
            }
            if (best == rows.size()) break;  // column clear below pivot_row
            std::swap(rows[pivot_row], rows[best]);
            bool clean = true;
            for (size_t i = pivot_row + 1; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                Int f;
                mpz_fdiv_q(f.get_mpz_t(), rows[i][col].get_mpz_t(), rows[pivot_row][col].get_mpz_t());
                for (size_t j = 0; j < m; ++j) rows[i][j] -= f * rows[pivot_row][j];
                if (rows[i][col] != 0) clean = false;
            }
            if (clean) break;
        }
        if (rows[pivot_row][col] != 0) {
            if (rows[pivot_row][col] < 0)
                for (size_t j = 0; j < m; ++j) rows[pivot_row][j] = -rows[pivot_row][j];
            ++pivot_row;
        }
    }
    require(pivot_row == m, "hnf: lattice does not have full rank");
    rows.resize(m);
    for (size_t col = 1; col < m; ++col) {
        for (size_t i = 0; i < col; ++i) {
            Int f;
            mpz_fdiv_q(f.get_mpz_t(), rows[i][col].get_mpz_t(), rows[col][col].get_mpz_t());
            if (f == 0) continue;
            for (size_t j = 0; j < m; ++j) rows[i][j] -= f * rows[col][j];
        }
    }
    return rows;
}

}  // namespace

IdealLattice IdealLattice::from_generator_rows(std::vector<std::vector<Int>> rows, size_t m) {
    IdealLattice lat;
    lat.rows_ = hnf(std::move(rows), m);
    lat.det_ = 1;
    for (size_t i = 0; i < m; ++i) lat.det_ *= lat.rows_[i][i];
    return lat;
}

IdealLattice IdealLattice::power(const PrimeIdeal& P, long k) {
    require(k >= 0, "IdealLattice::power: negative exponent");
    const FieldPtr& field = P.field;
    const size_t m = static_cast<size_t>(field->degree());
    RingElement z = RingElement::generator(field);

    std::vector<std::vector<Int>> rows;
    if (k == 0) {
        RingElement basis_el = RingElement::one(field);
        for (size_t i = 0; i < m; ++i) {
            rows.push_back(basis_el.coeffs());
            basis_el = basis_el * z;
        }
        return from_generator_rows(std::move(rows), m);
    }

    // Z-module generators of P^k: q^a * g(z)^b * z^i over a + b = k.
    RingElement g_el = RingElement::from_polynomial(field, ZPoly(std::vector<Int>(P.g.begin(), P.g.end())));
    std::vector<RingElement> gen_pows{RingElement::one(field)};
    for (long b = 1; b <= k; ++b) gen_pows.push_back(gen_pows.back() * g_el);
    for (long b = 0; b <= k; ++b) {
        Int qa = frey::power(P.q, static_cast<unsigned long>(k - b));
        RingElement shifted = qa * gen_pows[static_cast<size_t>(b)];
        for (size_t i = 0; i < m; ++i) {
            rows.push_back(shifted.coeffs());
            shifted = shifted * z;
        }
    }
    return from_generator_rows(std::move(rows), m);
}

IdealLattice IdealLattice::multiply(const IdealLattice& a, const IdealLattice& b, const FieldPtr& field) {
    const size_t m = static_cast<size_t>(field->degree());
    std::vector<std::vector<Int>> rows;
    rows.reserve(m * m);
    for (const auto& ra : a.rows_) {
        RingElement ea(field, ra);
        for (const auto& rb : b.rows_) {
            rows.push_back((ea * RingElement(field, rb)).coeffs());
        }
    }
    return from_generator_rows(std::move(rows), m);
}

bool IdealLattice::contains_coords(std::vector<Int> coords) const {
    const size_t m = rows_.size();
    for (size_t i = 0; i < m; ++i) {
        if (!mpz_divisible_p(coords[i].get_mpz_t(), rows_[i][i].get_mpz_t())) return false;
        Int c = coords[i] / rows_[i][i];
        if (c == 0) continue;
        for (size_t j = i; j < m; ++j) coords[j] -= c * rows_[i][j];
    }
    return true;
}

bool IdealLattice::contains(const RingElement& x) const { return contains_coords(x.coeffs()); }

bool IdealLattice::contains_lattice(const IdealLattice& other) const {
    for (const auto& row : other.rows_)
        if (!contains_coords(row)) return false;
    return true;
}

std::vector<RingElement> IdealLattice::coset_representatives(const FieldPtr& field) const {
    require(det_ <= 1000000, "coset_representatives: quotient too large to enumerate");
    const size_t m = rows_.size();
    std::vector<RingElement> out;
    std::vector<Int> cur(m, Int(0));
    while (true) {
        out.emplace_back(field, cur);
        size_t i = 0;
        while (i < m) {
            cur[i] += 1;
            if (cur[i] < rows_[i][i]) break;
            cur[i] = 0;
            ++i;
        }
        if (i == m) break;
    }
    return out;
}

namespace {

// Per-call ladder of P^(2^i) lattices; arbitrary powers are assembled by
// binary composition. Results are identical with or without the ladder.
class PowerLadder {
public:
    explicit PowerLadder(const PrimeIdeal& P) : P_(P) {}

    IdealLattice lattice_for(long k) {
        require(k >= 1, "PowerLadder: exponent must be >= 1");
        IdealLattice acc;
        bool have = false;
        size_t bit = 0;
        long kk = k;
        while (kk > 0) {
            if (kk & 1) {
                acc = have ? IdealLattice::multiply(acc, pow2(bit), P_.field) : pow2(bit);
                have = true;
            }
            kk >>= 1;
            ++bit;
        }
        return acc;
    }

private:
    const IdealLattice& pow2(size_t i) {
        while (pow2_.size() <= i) {
            if (pow2_.empty())
                pow2_.push_back(IdealLattice::power(P_, 1));
            else
                pow2_.push_back(IdealLattice::multiply(pow2_.back(), pow2_.back(), P_.field));
        }
        return pow2_[i];
    }

    const PrimeIdeal& P_;
    std::vector<IdealLattice> pow2_;
};

}  // namespace

long valuation(const RingElement& x, const PrimeIdeal& P) {
    if (x.is_zero()) throw undefined_valuation("valuation: the zero element has no finite valuation");
    PowerLadder ladder(P);
    if (!ladder.lattice_for(1).contains(x)) return 0;
    long lo = 1;
    long hi = 2;
    while (ladder.lattice_for(hi).contains(x)) {
        lo = hi;
        hi *= 2;
    }
    while (hi - lo > 1) {
        long mid = lo + (hi - lo) / 2;
        if (ladder.lattice_for(mid).contains(x))
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

Int ResidueImage::scalar() const {
    if (!is_scalar()) throw rejected_input("ResidueImage: residue field is not prime");
    return value.empty() ? Int(0) : value[0];
}

ResidueImage reduce_mod(const RingElement& x, const PrimeIdeal& P) {
    ResidueImage img;
    img.q = P.q;
    img.g = P.g;
    fq::Poly coords = fq::reduce(x.coeffs(), P.q);
    img.value = fq::mod(coords, P.g, P.q);
    return img;
}

std::vector<PrimeIdeal> radical_outside(const RingElement& x, const Int& n) {
    if (x.is_zero()) throw rejected_input("radical_outside: x must be nonzero");
    Int nx = abs(norm(x));
    std::vector<PrimeIdeal> out;
    if (nx == 1) return out;
    for (const auto& [q, ignored] : factorize(nx)) {
        if (n != 0 && mpz_divisible_p(n.get_mpz_t(), q.get_mpz_t())) continue;
        for (const auto& P : factor_prime(q, x.field())) {
            if (valuation(x, P) > 0) out.push_back(P);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PrimeIdeal> radical_outside(const Int& x, const Int& n, const FieldPtr& field) {
    return radical_outside(RingElement::from_integer(field, x), n);
}

}  // namespace frey
