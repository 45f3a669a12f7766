#include "usctec/field.hpp"

#include "usctec/errors.hpp"

namespace usctec {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(std::uint64_t prime) : p_(prime) {
    if (prime >= (std::uint64_t{1} << 32)) throw InputError("prime must be below 2^32");
    if (!is_prime(prime)) throw InputError(std::to_string(prime) + " is not prime");
}

std::uint64_t PrimeField::reduce(std::int64_t v) const {
    auto p = static_cast<std::int64_t>(p_);
    std::int64_t r = v % p;
    return static_cast<std::uint64_t>(r < 0 ? r + p : r);
}

std::uint64_t PrimeField::pow(std::uint64_t base, std::uint64_t exp) const {
    std::uint64_t result = 1 % p_;
    base %= p_;
    while (exp) {
        if (exp & 1) result = mul(result, base);
        base = mul(base, base);
        exp >>= 1;
    }
    return result;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
    if (a % p_ == 0) throw InputError("inverse of zero");
    return pow(a, p_ - 2);
}

FieldMatrix FieldMatrix::columns(std::span<const std::size_t> idx) const {
    FieldMatrix out(rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) out.at(i, j) = at(i, idx[j]);
    return out;
}

FieldMatrix FieldMatrix::row_range(std::size_t begin, std::size_t end) const {
    FieldMatrix out(end - begin, cols_);
    for (std::size_t i = begin; i < end; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(i - begin, j) = at(i, j);
    return out;
}

FieldMatrix FieldMatrix::random(const PrimeField& field, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> pick(0, field.prime() - 1);
    FieldMatrix out(rows, cols);
    for (auto& v : out.data_) v = pick(rng);
    return out;
}

FieldMatrix multiply(const PrimeField& field, const FieldMatrix& a, const FieldMatrix& b) {
    if (a.cols() != b.rows()) throw InputError("matrix dimension mismatch in multiply");
    FieldMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t t = 0; t < a.cols(); ++t) {
            const std::uint64_t x = a.at(i, t);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out.at(i, j) = field.add(out.at(i, j), field.mul(x, b.at(t, j)));
        }
    return out;
}

void axpy(const PrimeField& field, FieldMatrix& a, std::uint64_t c, const FieldMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("matrix dimension mismatch in axpy");
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) a.at(i, j) = field.add(a.at(i, j), field.mul(c, b.at(i, j)));
}

std::uint64_t lagrange_basis(const PrimeField& field, std::span<const std::uint64_t> nodes, std::size_t l,
                             std::uint64_t z) {
    std::uint64_t num = 1;
    std::uint64_t den = 1;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        if (k == l) continue;
        num = field.mul(num, field.sub(z, nodes[k]));
        den = field.mul(den, field.sub(nodes[l], nodes[k]));
    }
    return field.div(num, den);
}

}  // namespace usctec
