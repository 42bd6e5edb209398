#pragma once

/// @file algebra.hpp
/// Finite groups, structure-constant algebras and multipliers.

#include "mhgc/linalg.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace mhgc {

/// A finite group given by its multiplication table.
class FiniteGroup {
public:
    FiniteGroup();  // trivial group
    /// Validates closure, associativity (exhaustively), identity and inverses.
    /// Throws Error(InvalidGroup).
    FiniteGroup(std::vector<std::vector<std::size_t>> table, std::size_t identity,
                std::vector<std::string> labels = {});

    static FiniteGroup trivial();
    static FiniteGroup cyclic(std::size_t n);
    /// Permutations of {1,2,3}; (στ)(x) = σ(τ(x)). Element order:
    /// e, (12), (13), (23), (123), (132).
    static FiniteGroup symmetric3();
    /// "trivial", "Zn" / "Z/n" for n >= 1, or "S3". Throws Error(InvalidArgument).
    static FiniteGroup by_name(const std::string& name);

    std::size_t order() const noexcept { return table_.size(); }
    std::size_t identity() const noexcept { return identity_; }
    std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
    std::size_t inv(std::size_t a) const { return inverse_[a]; }
    const std::vector<std::vector<std::size_t>>& table() const noexcept { return table_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(std::size_t a) const { return labels_[a]; }
    std::size_t index_of(const std::string& label) const;

    /// Same set with multiplication x·y := y x.
    FiniteGroup opposite() const;

    friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
        return a.table_ == b.table_ && a.identity_ == b.identity_;
    }

private:
    std::vector<std::vector<std::size_t>> table_;
    std::size_t identity_ = 0;
    std::vector<std::size_t> inverse_;
    std::vector<std::string> labels_;
};

/// Finite-dimensional associative algebra, e_i e_j = Σ_k c(i,j,k) e_k.
class ComponentAlgebra {
public:
    ComponentAlgebra() = default;
    /// `structure` has dim^3 entries indexed (i*dim + j)*dim + k.
    ComponentAlgebra(std::size_t dim, std::vector<Scalar> structure);

    /// Pointwise functions on n points, basis of indicator functions.
    static ComponentAlgebra functions_on_points(std::size_t n);
    /// All products zero.
    static ComponentAlgebra zero_product(std::size_t n);
    /// Algebra with e_i e_j = e_{table[i][j]}.
    static ComponentAlgebra group_algebra(const FiniteGroup& g);

    std::size_t dim() const noexcept { return dim_; }
    const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const { return structure_[(i * dim_ + j) * dim_ + k]; }
    const std::vector<Scalar>& structure() const noexcept { return structure_; }

    Vector basis_product(std::size_t i, std::size_t j) const;
    Vector multiply(const Vector& x, const Vector& y) const;

    /// Matrix of b ↦ e_i b.
    const Matrix& left_mul(std::size_t i) const { return left_[i]; }
    /// Matrix of b ↦ b e_i.
    const Matrix& right_mul(std::size_t i) const { return right_[i]; }
    Matrix left_mul_of(const Vector& x) const;
    Matrix right_mul_of(const Vector& x) const;

    /// First basis triple (i,j,k) with (e_i e_j) e_k ≠ e_i (e_j e_k).
    std::optional<std::array<std::size_t, 3>> associativity_witness() const;
    /// Two-sided identity element, if any.
    std::optional<Vector> unit() const;

    friend bool operator==(const ComponentAlgebra& a, const ComponentAlgebra& b) {
        return a.dim_ == b.dim_ && a.structure_ == b.structure_;
    }

private:
    std::size_t dim_ = 0;
    std::vector<Scalar> structure_;
    std::vector<Matrix> left_;
    std::vector<Matrix> right_;
};

/// (A ⊗ B) with componentwise product; index (i,j) ↦ i*dim(B) + j.
ComponentAlgebra tensor_product(const ComponentAlgebra& a, const ComponentAlgebra& b);

/// Block-diagonal direct sum of the given algebras, in order.
ComponentAlgebra direct_sum(const std::vector<ComponentAlgebra>& parts);

/// Product nondegenerate in both arguments (dimension zero counts as nondegenerate).
bool check_nondegenerate(const ComponentAlgebra& alg);

/// Double multiplier (L, R) on the carrier of some algebra.
struct Multiplier {
    Matrix left;
    Matrix right;

    friend bool operator==(const Multiplier& a, const Multiplier& b) {
        return a.left == b.left && a.right == b.right;
    }
};

Multiplier identity_multiplier(std::size_t dim);
Multiplier zero_multiplier(std::size_t dim);
Multiplier multiplier_from_element(const ComponentAlgebra& alg, const Vector& a);
/// The unique a with (L_a, R_a) = m, or nullopt.
std::optional<Vector> element_from_multiplier(const ComponentAlgebra& alg, const Multiplier& m);
/// Product m1 m2: left = L1 L2, right = R2 R1.
Multiplier compose_multipliers(const Multiplier& m1, const Multiplier& m2);
Multiplier scaled(const Multiplier& m, const Scalar& c);
Multiplier operator+(const Multiplier& a, const Multiplier& b);

/// Description of the first violated multiplier law, or nullopt if (L, R) is a multiplier.
std::optional<std::string> multiplier_defect(const ComponentAlgebra& alg, const Multiplier& m);

/// Right map R with R(a)b = aL(b) for the given left map, if one exists.
std::optional<Matrix> complete_multiplier(const ComponentAlgebra& alg, const Matrix& left);

/// Extension of a nondegenerate homomorphism φ: A → M(B) to M(A), evaluated at m.
/// `phi[i]` is φ(e_i). Throws Error(NotNondegenerate) when span φ(A)B ≠ B or
/// span Bφ(A) ≠ B, and Error(Inconsistent) when φ admits no extension at m.
Multiplier extend_nondegenerate_hom(const ComponentAlgebra& a, const ComponentAlgebra& b,
                                    const std::vector<Multiplier>& phi, const Multiplier& m);

}  // namespace mhgc
