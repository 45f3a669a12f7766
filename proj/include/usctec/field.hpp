#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace usctec {

/// Arithmetic modulo a prime p < 2^32, so products fit in 64 bits.
class PrimeField {
public:
    static constexpr std::uint64_t kDefaultPrime = 2147483647;  // 2^31 - 1

    explicit PrimeField(std::uint64_t prime = kDefaultPrime);

    std::uint64_t prime() const { return p_; }

    std::uint64_t reduce(std::int64_t v) const;
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p_; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p_ - b) % p_; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p_; }
    std::uint64_t pow(std::uint64_t base, std::uint64_t exp) const;
    /// Throws InputError for zero.
    std::uint64_t inv(std::uint64_t a) const;
    std::uint64_t div(std::uint64_t a, std::uint64_t b) const { return mul(a, inv(b)); }

private:
    std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

/// Dense row-major matrix of residues.
class FieldMatrix {
public:
    FieldMatrix() = default;
    FieldMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint64_t& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    std::uint64_t at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    /// Sub-matrix with the given column indices, in the given order.
    FieldMatrix columns(std::span<const std::size_t> idx) const;
    /// Rows [begin, end).
    FieldMatrix row_range(std::size_t begin, std::size_t end) const;

    static FieldMatrix random(const PrimeField& field, std::size_t rows, std::size_t cols, std::mt19937_64& rng);

    friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint64_t> data_;
};

FieldMatrix multiply(const PrimeField& field, const FieldMatrix& a, const FieldMatrix& b);
/// a + c * b
void axpy(const PrimeField& field, FieldMatrix& a, std::uint64_t c, const FieldMatrix& b);

/// prod_{k != l} (z - nodes[k]) / (nodes[l] - nodes[k])
std::uint64_t lagrange_basis(const PrimeField& field, std::span<const std::uint64_t> nodes, std::size_t l,
                             std::uint64_t z);

}  // namespace usctec
